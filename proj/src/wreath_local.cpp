#include "blockcraft/wreath_local.hpp"

#include <vector>

#include "blockcraft/partition.hpp"
#include "blockcraft/sym_chars.hpp"

namespace blockcraft {

DegreeMultiset::DegreeMultiset(std::map<BigInt, BigInt> entries, BigInt group_order)
    : entries_(std::move(entries)), group_order_(std::move(group_order)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->first <= 0 || it->second < 0) throw ArgumentError("DegreeMultiset: degrees and multiplicities must be positive");
    it = it->second == 0 ? entries_.erase(it) : std::next(it);
  }
  if (sum_of_squares() != group_order_)
    throw VerificationFailure("DegreeMultiset: sum of squared degrees " + sum_of_squares().get_str() +
                              " differs from group order " + group_order_.get_str());
}

BigInt DegreeMultiset::character_count() const {
  BigInt total = 0;
  for (const auto& [degree, mult] : entries_) total += mult;
  return total;
}

BigInt DegreeMultiset::sum_of_squares() const {
  BigInt total = 0;
  for (const auto& [degree, mult] : entries_) total += mult * degree * degree;
  return total;
}

DegreeMultiset trivial_group_degrees() { return DegreeMultiset({{1, 1}}, 1); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  for (; exp; exp >>= 1, base = mulmod(base, base, m))
    if (exp & 1) r = mulmod(r, base, m);
  return r;
}

}  // namespace

DegreeMultiset metacyclic_degrees(const MetacyclicSpec& spec) {
  if (spec.m == 0 || spec.d == 0) throw ArgumentError("metacyclic_degrees: m and d must be positive");
  if (powmod(spec.u, spec.d, spec.m) != 1 % spec.m)
    throw ArgumentError("metacyclic_degrees: u^d != 1 mod m, not an action of C_d");
  if (spec.m > (std::uint64_t{1} << 32)) throw ResourceError("metacyclic_degrees: m too large to enumerate orbits");

  std::map<BigInt, BigInt> entries;
  std::vector<bool> seen(spec.m, false);
  const std::uint64_t u = spec.u % spec.m;
  for (std::uint64_t x = 0; x < spec.m; ++x) {
    if (seen[x]) continue;
    std::uint64_t orbit = 0;
    std::uint64_t y = x;
    do {
      seen[y] = true;
      ++orbit;
      y = mulmod(y, u, spec.m);
    } while (y != x);
    entries[BigInt(static_cast<unsigned long>(orbit))] += static_cast<unsigned long>(spec.d / orbit);
  }
  return DegreeMultiset(std::move(entries), BigInt(static_cast<unsigned long>(spec.m)) * static_cast<unsigned long>(spec.d));
}

namespace {

// One way of spreading `size` boxes over the characters of a single base
// degree: `ways` distinct functions, each multiplying the wreath degree by
// numerator / denominator.
struct Distribution {
  int size = 0;
  BigInt numerator = 1;
  BigInt denominator = 1;
  BigInt ways = 1;
};

struct DistributionState {
  int remaining = 0;
  unsigned long used = 0;
  Distribution partial;
  BigInt repeat_factorials = 1;
};

// Pool entries sorted by size with their factor in the wreath degree formula.
struct PoolEntry {
  int size = 0;
  BigInt contribution;  // degree^size * f_lambda
  BigInt factorial;     // size!
};

void collect_distributions(const std::vector<PoolEntry>& pool, std::size_t index, const BigInt& available,
                           DistributionState state, std::vector<Distribution>& out) {
  // The pool is sorted by size, so nothing further fits once one entry does not.
  if (index == pool.size() || pool[index].size > state.remaining || available <= BigInt(state.used)) {
    BigInt falling = 1;
    for (unsigned long t = 0; t < state.used; ++t) falling *= available - t;
    state.partial.ways = exact_div(falling, state.repeat_factorials);
    out.push_back(std::move(state.partial));
    return;
  }
  const PoolEntry& entry = pool[index];
  for (unsigned long v = 0;; ++v) {
    collect_distributions(pool, index + 1, available, state, out);
    if (entry.size > state.remaining || available <= BigInt(state.used)) break;
    state.remaining -= entry.size;
    state.used += 1;
    state.partial.size += entry.size;
    state.partial.numerator *= entry.contribution;
    state.partial.denominator *= entry.factorial;
    state.repeat_factorials *= v + 1;
  }
}

}  // namespace

DegreeMultiset wreath_degrees(const DegreeMultiset& base, int w) {
  if (w < 0) throw ArgumentError("wreath_degrees: w must be non-negative");

  std::vector<std::pair<int, BigInt>> shapes;  // (size, f_lambda)
  for (int s = 1; s <= w; ++s)
    for (const auto& lambda : enumerate_partitions(s)) shapes.emplace_back(s, sym_degree(lambda));

  // Per base degree, every way of assigning partitions to its characters.
  std::vector<std::vector<Distribution>> per_degree;
  for (const auto& [degree, mult] : base.entries()) {
    std::vector<PoolEntry> pool;
    pool.reserve(shapes.size());
    for (const auto& [size, f] : shapes)
      pool.push_back({size, big_pow(degree, static_cast<unsigned long>(size)) * f, factorial(static_cast<unsigned long>(size))});
    std::vector<Distribution> options;
    DistributionState start;
    start.remaining = w;
    collect_distributions(pool, 0, mult, start, options);
    per_degree.push_back(std::move(options));
  }

  std::map<BigInt, BigInt> entries;
  const BigInt w_factorial = factorial(static_cast<unsigned long>(w));
  std::vector<const Distribution*> chosen(per_degree.size());
  auto combine = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == per_degree.size()) {
      if (remaining != 0) return;
      BigInt numerator = w_factorial, denominator = 1, ways = 1;
      for (const Distribution* d : chosen) {
        numerator *= d->numerator;
        denominator *= d->denominator;
        ways *= d->ways;
      }
      entries[exact_div(numerator, denominator)] += ways;
      return;
    }
    for (const Distribution& d : per_degree[i]) {
      if (d.size > remaining) continue;
      chosen[i] = &d;
      self(self, i + 1, remaining - d.size);
    }
  };
  combine(combine, 0, w);

  return DegreeMultiset(std::move(entries), big_pow(base.group_order(), static_cast<unsigned long>(w)) * w_factorial);
}

DegreeMultiset direct_product(const DegreeMultiset& a, const DegreeMultiset& b) {
  std::map<BigInt, BigInt> entries;
  for (const auto& [da, ma] : a.entries())
    for (const auto& [db, mb] : b.entries()) entries[da * db] += ma * mb;
  return DegreeMultiset(std::move(entries), a.group_order() * b.group_order());
}

BigInt irr_lprime_count(const DegreeMultiset& degrees, unsigned ell) {
  if (!is_prime(ell)) throw ArgumentError("irr_lprime_count: ell must be prime");
  BigInt total = 0;
  for (const auto& [degree, mult] : degrees.entries())
    if (!mpz_divisible_ui_p(degree.get_mpz_t(), ell)) total += mult;
  return total;
}

}  // namespace blockcraft
