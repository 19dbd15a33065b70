#include "blockcraft/glq_mckay_blocks.hpp"

#include <algorithm>
#include <mutex>

#include "blockcraft/config.hpp"
#include "blockcraft/parallel.hpp"

namespace blockcraft {

namespace {

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

}  // namespace

int d_ell(std::uint64_t q, unsigned ell) {
  if (!is_prime(ell)) throw ArgumentError("d_ell: ell must be prime");
  if (q % ell == 0) throw ArgumentError("d_ell: ell = " + std::to_string(ell) + " divides q = " + std::to_string(q));
  std::uint64_t power = q % ell;
  int d = 1;
  while (power != 1) {
    power = power * (q % ell) % ell;
    ++d;
  }
  return d;
}

EllContext EllContext::make(std::uint64_t q, unsigned ell) {
  characteristic(q);
  return EllContext{q, ell, d_ell(q, ell)};
}

BigInt cyclotomic_value(int m, const BigInt& q) {
  if (m < 1) throw ArgumentError("cyclotomic_value: m must be >= 1");
  // Values for every divisor, smallest first.
  std::map<int, BigInt> phi;
  for (int e = 1; e <= m; ++e) {
    if (m % e) continue;
    BigInt value = big_pow(q, static_cast<unsigned long>(e)) - 1;
    for (const auto& [f, v] : phi)
      if (e % f == 0) value = exact_div(value, v);
    phi.emplace(e, std::move(value));
  }
  return phi.at(m);
}

bool phi_divisibility_direct(int m, std::uint64_t q, unsigned ell) {
  return mpz_divisible_ui_p(cyclotomic_value(m, big(q)).get_mpz_t(), ell) != 0;
}

bool phi_divisibility_lemma(int m, std::uint64_t q, unsigned ell) {
  const int d = d_ell(q, ell);
  if (m % d) return false;
  int rest = m / d;
  while (rest % static_cast<int>(ell) == 0) rest /= static_cast<int>(ell);
  return rest == 1;
}

bool phi_divisibility(int m, std::uint64_t q, unsigned ell) {
  const bool lemma = phi_divisibility_lemma(m, q, ell);
  if (lemma != phi_divisibility_direct(m, q, ell))
    throw VerificationFailure("phi_divisibility: paths disagree at m=" + std::to_string(m) + " q=" + std::to_string(q) +
                              " ell=" + std::to_string(ell));
  return lemma;
}

bool unipotent_lprime_by_valuation(const Partition& lambda, const EllContext& ctx) {
  return !mpz_divisible_ui_p(unipotent_degree(lambda, big(ctx.q)).get_mpz_t(), ctx.ell);
}

bool unipotent_lprime_by_hooks(const Partition& lambda, const EllContext& ctx) {
  // The d-weight must be w: exactly w hook lengths divisible by d. Those
  // lengths divided by d are the hooks of the d-quotient, and their product
  // must carry the same power of ell as w!.
  const int w = lambda.size() / ctx.d;
  int divisible = 0;
  std::uint64_t quotient_valuation = 0;
  for (int h : hook_lengths(lambda).lengths) {
    if (h % ctx.d) continue;
    ++divisible;
    quotient_valuation += valuation(static_cast<std::uint64_t>(h / ctx.d), ctx.ell);
  }
  return divisible == w && quotient_valuation == factorial_valuation(static_cast<std::uint64_t>(w), ctx.ell);
}

bool unipotent_is_lprime(const Partition& lambda, const EllContext& ctx) {
  const bool by_valuation = unipotent_lprime_by_valuation(lambda, ctx);
  if (ctx.ell > 2 && by_valuation != unipotent_lprime_by_hooks(lambda, ctx))
    throw VerificationFailure("unipotent_is_lprime: hook criterion disagrees with valuation for " + lambda.str());
  return by_valuation;
}

bool centralizes_sylow(const ClassType& type, const EllContext& ctx) {
  return valuation(centralizer_order(type, ctx.q), ctx.ell) == valuation(gl_order(type.rank(), big(ctx.q)), ctx.ell);
}

namespace {

std::uint64_t checked_pow(std::uint64_t q, int d) {
  std::uint64_t r = 1;
  for (int i = 0; i < d; ++i) {
    if (r > UINT64_MAX / q) throw ResourceError("q^d overflows 64 bits");
    r *= q;
  }
  return r;
}

}  // namespace

bool series_is_lprime(const SeriesLabel& label, const EllContext& ctx) {
  bool lprime = centralizes_sylow(label.type(), ctx);
  for (const auto& [d, lambda] : label.components) {
    if (!lprime) break;
    lprime = unipotent_is_lprime(lambda, EllContext::make(checked_pow(ctx.q, d), ctx.ell));
  }
  const bool by_degree = !mpz_divisible_ui_p(green_degree(label, ctx.q).get_mpz_t(), ctx.ell);
  if (lprime != by_degree) throw VerificationFailure("series_is_lprime: criterion disagrees with degree valuation");
  return lprime;
}

BigInt irr_lprime_count_gl(int n, const EllContext& ctx) {
  const auto labels = series_labels(n, ctx.q);
  const auto flags = parallel_map<char>(labels.size(), [&](std::size_t i) { return series_is_lprime(labels[i].first, ctx); });
  BigInt total = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (flags[i]) total += labels[i].second;
  return total;
}

DegreeMultiset local_overgroup_degrees(int n, const EllContext& ctx) {
  const int w = n / ctx.d, r = n % ctx.d;
  const std::uint64_t m = checked_pow(ctx.q, ctx.d) - 1;
  const DegreeMultiset base = metacyclic_degrees({m, static_cast<std::uint64_t>(ctx.d), ctx.q % m});
  return direct_product(wreath_degrees(base, w), all_degrees(r, ctx.q));
}

BigInt local_overgroup_count(int n, const EllContext& ctx) {
  const int w = n / ctx.d, r = n % ctx.d;
  const std::uint64_t m = checked_pow(ctx.q, ctx.d) - 1;
  const DegreeMultiset base = metacyclic_degrees({m, static_cast<std::uint64_t>(ctx.d), ctx.q % m});
  const BigInt wreath_part = irr_lprime_count(wreath_degrees(base, w), ctx.ell);
  return r == 0 ? wreath_part : wreath_part * irr_lprime_count_gl(r, ctx);
}

namespace {

// Multiset of +-degree mod ell over the ell' characters.
std::map<unsigned long, BigInt> signed_residues(const DegreeMultiset& degrees, unsigned ell) {
  std::map<unsigned long, BigInt> out;
  for (const auto& [degree, mult] : degrees.entries()) {
    const unsigned long r = mpz_fdiv_ui(degree.get_mpz_t(), ell);
    if (r == 0) continue;
    out[std::min(r, ell - r)] += mult;
  }
  return out;
}

}  // namespace

VerificationReport ms10_verify(int n, std::uint64_t q, unsigned ell) {
  VerificationReport report;
  report.conjecture = Conjecture::ms10;
  report.param("n", n).param("q", static_cast<long>(q)).param("ell", static_cast<long>(ell));
  ReportTimer timer(report);
  const EllContext ctx = EllContext::make(q, ell);
  const DegreeMultiset global_degrees = all_degrees(n, q);

  const BigInt global = irr_lprime_count_gl(n, ctx);
  if (global != irr_lprime_count(global_degrees, ell))
    throw VerificationFailure("ms10_verify: series criterion count differs from degree valuation count");
  report.settle(global, local_overgroup_count(n, ctx));

  const int w = n / ctx.d, r = n % ctx.d;
  report.notes.push_back("d=" + std::to_string(ctx.d) + " w=" + std::to_string(w) + " r=" + std::to_string(r));
  const bool in_match = signed_residues(global_degrees, ell) == signed_residues(local_overgroup_degrees(n, ctx), ell);
  report.notes.push_back(std::string("isaacs_navarro_heuristic: degrees mod ell ") +
                         (in_match ? "agree up to sign" : "differ up to sign"));
  timer.stop();
  return report;
}

VerificationReport defining_char_mckay_verify(int n, std::uint64_t q) {
  VerificationReport report;
  report.conjecture = Conjecture::mckay;
  const std::uint64_t p = characteristic(q);
  report.param("n", n).param("q", static_cast<long>(q)).param("ell", static_cast<long>(p));
  ReportTimer timer(report);
  const BigInt enumerated = irr_pprime_count_gl_enumerated(n, q);
  if (enumerated != irr_lprime_count(all_degrees(n, q), static_cast<unsigned>(p)) || enumerated != irr_pprime_count_gl(n, q))
    throw VerificationFailure("defining_char_mckay_verify: p'-character counts disagree");
  report.settle(enumerated, maslowski_local_count(n, q));
  report.notes.push_back("defining characteristic: local side is the Borel subgroup count (q-1) q^(n-1)");
  timer.stop();
  return report;
}

GlUnipotentBlockLabel unipotent_block_of(const Partition& lambda, const EllContext& ctx) {
  GlUnipotentBlockLabel label;
  label.context = ctx;
  label.n = lambda.size();
  if (ctx.d == 1) {
    label.weight = lambda.size();
  } else {
    const CoreQuotient cq = d_core_and_quotient(lambda, ctx.d);
    label.d_core = cq.core;
    label.weight = cq.weight;
  }
  for (int i = 0; i < label.weight; ++i) label.levi.emplace_back(1, ctx.d);
  if (!label.d_core.empty()) label.levi.emplace_back(label.d_core.size(), 1);
  if (static_cast<int>(ctx.ell) < limits().unipotent_block_min_ell) {
    label.verified = false;
    label.warning = "ell = " + std::to_string(ctx.ell) + " is below the verified regime ell >= " +
                    std::to_string(limits().unipotent_block_min_ell);
  }
  return label;
}

BigInt unipotent_block_series_size(const GlUnipotentBlockLabel& label) {
  const int d = label.context.d;
  const BigInt census = count_partitions_with_core(label.n, d, label.d_core);
  const DegreeMultiset cyclic = metacyclic_degrees({static_cast<std::uint64_t>(d), 1, 1});
  const BigInt weyl = wreath_degrees(cyclic, label.weight).character_count();
  const BigInt tuples = multipartition_count(d, label.weight);
  if (census != weyl || census != tuples)
    throw VerificationFailure("unipotent_block_series_size: counts disagree (" + census.get_str() + ", " + weyl.get_str() +
                              ", " + tuples.get_str() + ")");
  return census;
}

std::vector<VerificationReport> unipotent_block_census(int n, const EllContext& ctx) {
  std::vector<std::pair<GlUnipotentBlockLabel, BigInt>> blocks;
  for (const auto& lambda : enumerate_partitions(n)) {
    GlUnipotentBlockLabel label = unipotent_block_of(lambda, ctx);
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const auto& b) { return b.first == label; });
    if (it == blocks.end()) blocks.emplace_back(std::move(label), 1);
    else it->second += 1;
  }

  std::vector<VerificationReport> reports;
  BigInt covered = 0;
  for (const auto& [label, members] : blocks) {
    VerificationReport r;
    r.conjecture = Conjecture::block_census;
    r.param("n", n).param("q", static_cast<long>(ctx.q)).param("ell", static_cast<long>(ctx.ell));
    r.param("core", label.d_core.str()).param("weight", label.weight);
    ReportTimer timer(r);
    r.settle(members, unipotent_block_series_size(label));
    r.notes.push_back("d=" + std::to_string(ctx.d));
    if (!label.verified) r.notes.push_back("unverified: " + label.warning);
    covered += members;
    timer.stop();
    reports.push_back(std::move(r));
  }

  VerificationReport total;
  total.conjecture = Conjecture::block_census;
  total.param("n", n).param("q", static_cast<long>(ctx.q)).param("ell", static_cast<long>(ctx.ell)).param("core", "*");
  total.settle(covered, partition_count(n));
  total.notes.push_back("unipotent blocks cover all " + partition_count(n).get_str() + " unipotent characters");
  reports.push_back(std::move(total));
  return reports;
}

}  // namespace blockcraft
