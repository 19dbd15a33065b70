#include "blockcraft/sym_blocks.hpp"

#include <algorithm>

#include "blockcraft/sym_chars.hpp"
#include "blockcraft/wreath_local.hpp"

namespace blockcraft {

SymBlockLabel SymBlockLabel::make(unsigned p, Partition core, int weight) {
  if (!is_prime(p)) throw ArgumentError("SymBlockLabel: p must be prime");
  if (weight < 0) throw ArgumentError("SymBlockLabel: weight must be non-negative");
  if (!is_d_core(core, static_cast<int>(p))) throw ArgumentError("SymBlockLabel: " + core.str() + " is not a p-core");
  const int n = core.size() + static_cast<int>(p) * weight;
  return SymBlockLabel{p, std::move(core), weight, n};
}

std::size_t BlockCharacterData::height_zero_count() const {
  return static_cast<std::size_t>(std::count_if(heights.begin(), heights.end(), [](const auto& h) { return h.second == 0; }));
}

SymBlockLabel block_of(const Partition& lambda, unsigned p) {
  if (!is_prime(p)) throw ArgumentError("block_of: p must be prime");
  const CoreQuotient cq = d_core_and_quotient(lambda, static_cast<int>(p));
  return SymBlockLabel{p, cq.core, cq.weight, lambda.size()};
}

std::vector<SymBlockLabel> block_labels(int n, unsigned p) {
  if (!is_prime(p)) throw ArgumentError("block_labels: p must be prime");
  std::vector<SymBlockLabel> out;
  for (int w = 0; static_cast<int>(p) * w <= n; ++w)
    for (auto& core : enumerate_d_cores(n - static_cast<int>(p) * w, static_cast<int>(p)))
      out.push_back(SymBlockLabel{p, std::move(core), w, n});
  return out;
}

BlockCharacterData block_members_and_heights(const SymBlockLabel& label) {
  BlockCharacterData data;
  data.label = label;
  const std::uint64_t pw = static_cast<std::uint64_t>(label.p) * static_cast<std::uint64_t>(label.weight);
  const std::uint64_t defect_exponent = factorial_valuation(pw, label.p);
  data.defect_group_order = big_pow(static_cast<long>(label.p), defect_exponent);
  // height = nu_p(chi(1)) - nu_p(|G : D|)
  const std::uint64_t index_valuation = factorial_valuation(static_cast<std::uint64_t>(label.n), label.p) - defect_exponent;

  for (auto& lambda : enumerate_partitions(label.n)) {
    if (d_core_and_quotient(lambda, static_cast<int>(label.p)).core != label.core) continue;
    const std::uint64_t v = sym_degree_valuation(lambda, label.p);
    if (v < index_valuation) throw VerificationFailure("negative height for " + lambda.str());
    data.heights.emplace(lambda, static_cast<unsigned>(v - index_valuation));
    data.members.push_back(std::move(lambda));
  }
  return data;
}

VerificationReport bhz_verify(const SymBlockLabel& label) {
  VerificationReport report;
  report.conjecture = Conjecture::bhz;
  report.param("n", label.n).param("p", static_cast<long>(label.p)).param("core", label.core.str()).param("weight", label.weight);
  ReportTimer timer(report);
  const BlockCharacterData data = block_members_and_heights(label);
  const bool all_height_zero = data.height_zero_count() == data.members.size();
  const bool abelian_defect = label.weight < static_cast<int>(label.p);
  report.settle(all_height_zero ? 1 : 0, abelian_defect ? 1 : 0);
  report.notes.push_back("members=" + std::to_string(data.members.size()) +
                         " height_zero=" + std::to_string(data.height_zero_count()) +
                         " defect_order=" + data.defect_group_order.get_str());
  timer.stop();
  return report;
}

Partition bhz_witness_search(int w) {
  if (w < 2) throw ArgumentError("bhz_witness_search: needs w >= 2");
  for (auto& lambda : enumerate_partitions(2 * w)) {
    if (!d_core_and_quotient(lambda, 2).core.empty()) continue;
    if (sym_degree_valuation(lambda, 2) > 0) return lambda;
  }
  throw VerificationFailure("bhz_witness_search: no even-degree partition with empty 2-core for w = " + std::to_string(w));
}

namespace {

unsigned primitive_root(unsigned p) {
  if (p == 2) return 1;
  for (unsigned g = 2; g < p; ++g) {
    unsigned x = 1, order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  throw ArgumentError("primitive_root: p must be prime");
}

// N_{S_p}(C_p) = C_p : C_{p-1}
DegreeMultiset frobenius_base(unsigned p) { return metacyclic_degrees({p, p - 1, primitive_root(p)}); }

}  // namespace

VerificationReport am_verify_abelian(const SymBlockLabel& label) {
  if (label.weight >= static_cast<int>(label.p))
    throw UnsupportedRegime("am_verify_abelian: weight " + std::to_string(label.weight) + " >= p = " +
                            std::to_string(label.p) + " (non-abelian defect)");
  VerificationReport report;
  report.conjecture = Conjecture::alperin_mckay;
  report.param("n", label.n).param("p", static_cast<long>(label.p)).param("core", label.core.str()).param("weight", label.weight);
  ReportTimer timer(report);

  const BigInt global = count_partitions_with_core(label.n, static_cast<int>(label.p), label.core);
  const DegreeMultiset local = wreath_degrees(frobenius_base(label.p), label.weight);
  report.settle(global, local.character_count());

  const BlockCharacterData data = block_members_and_heights(label);
  const bool global_height_zero = data.height_zero_count() == data.members.size();
  const bool local_height_zero = irr_lprime_count(local, label.p) == local.character_count();
  if (BigInt(static_cast<unsigned long>(data.members.size())) != global) {
    report.passed = false;
    report.notes.push_back("core filter and quotient count disagree");
  }
  if (!global_height_zero || !local_height_zero) {
    report.passed = false;
    report.notes.push_back("height zero check failed");
  } else {
    report.notes.push_back("all characters have height zero on both sides");
  }
  timer.stop();
  return report;
}

std::vector<std::vector<Partition>> nakayama_blocks(int n, unsigned p) {
  std::vector<std::vector<Partition>> blocks;
  std::vector<Partition> cores;
  for (auto& lambda : enumerate_partitions(n)) {
    const Partition core = d_core_and_quotient(lambda, static_cast<int>(p)).core;
    const auto it = std::find(cores.begin(), cores.end(), core);
    if (it == cores.end()) {
      cores.push_back(core);
      blocks.push_back({std::move(lambda)});
    } else {
      blocks[static_cast<std::size_t>(it - cores.begin())].push_back(std::move(lambda));
    }
  }
  return blocks;
}

namespace {

std::vector<std::vector<Partition>> normalized(std::vector<std::vector<Partition>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

VerificationReport nakayama_oracle_verify(int n, unsigned p) {
  VerificationReport report;
  report.conjecture = Conjecture::nakayama_oracle;
  report.param("n", n).param("p", static_cast<long>(p));
  ReportTimer timer(report);
  const auto oracle = normalized(central_character_blocks(n, p).blocks);
  const auto nakayama = normalized(nakayama_blocks(n, p));
  report.global_count = static_cast<unsigned long>(oracle.size());
  report.local_count = static_cast<unsigned long>(nakayama.size());
  report.passed = oracle == nakayama;
  if (!report.passed) report.notes.push_back("block partitions differ");
  timer.stop();
  return report;
}

std::vector<VerificationReport> sym_block_census(int n, unsigned p) {
  std::vector<VerificationReport> reports;
  BigInt covered = 0;
  for (const auto& label : block_labels(n, p)) {
    VerificationReport r;
    r.conjecture = Conjecture::block_census;
    r.param("n", n).param("p", static_cast<long>(p)).param("core", label.core.str()).param("weight", label.weight);
    ReportTimer timer(r);
    const BlockCharacterData data = block_members_and_heights(label);
    r.settle(static_cast<unsigned long>(data.members.size()), multipartition_count(static_cast<int>(p), label.weight));
    std::string heights = "heights:";
    for (const auto& lambda : data.members) heights += " " + lambda.str() + "=" + std::to_string(data.heights.at(lambda));
    r.notes.push_back("defect_order=" + data.defect_group_order.get_str());
    r.notes.push_back(std::move(heights));
    covered += r.global_count;
    timer.stop();
    reports.push_back(std::move(r));
  }
  VerificationReport total;
  total.conjecture = Conjecture::block_census;
  total.param("n", n).param("p", static_cast<long>(p)).param("core", "*");
  total.settle(covered, partition_count(n));
  reports.push_back(std::move(total));
  return reports;
}

VerificationReport sym_mckay_verify(int n, unsigned p) {
  if (!is_prime(p)) throw ArgumentError("sym_mckay_verify: p must be prime");
  VerificationReport report;
  report.conjecture = Conjecture::mckay;
  report.param("n", n).param("p", static_cast<long>(p));
  ReportTimer timer(report);
  const BigInt global = irr_pprime_count_sym(n, p);
  if (p == 2) {
    const BigInt local = sylow2_local_count(n);
    const BigInt closed_form = macdonald_count(n);
    report.settle(global, local);
    if (closed_form != global) {
      report.passed = false;
      report.notes.push_back("Macdonald closed form " + closed_form.get_str() + " differs");
    } else {
      report.notes.push_back("Macdonald closed form agrees");
    }
    timer.stop();
    return report;
  }
  // n < p^2: P = C_p^w is abelian and N(P) = (C_p : C_{p-1}) wr S_w x S_r.
  const int w = n / static_cast<int>(p), r = n % static_cast<int>(p);
  if (w >= static_cast<int>(p))
    throw UnsupportedRegime("sym mckay: local side for odd p needs n < p^2");
  const DegreeMultiset local = wreath_degrees(frobenius_base(p), w);
  report.settle(global, irr_lprime_count(local, p) * partition_count(r));
  report.notes.push_back("local group (C_p : C_(p-1)) wr S_" + std::to_string(w) + " x S_" + std::to_string(r));
  timer.stop();
  return report;
}

}  // namespace blockcraft
