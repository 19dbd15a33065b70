#include "blockcraft/glq_chars.hpp"

#include <algorithm>

#include "blockcraft/config.hpp"
#include "blockcraft/parallel.hpp"

namespace blockcraft {

int ClassType::rank() const {
  int n = 0;
  for (const auto& [d, m] : entries) n += d * m;
  return n;
}

int SeriesLabel::rank() const {
  int n = 0;
  for (const auto& [d, lambda] : components) n += d * lambda.size();
  return n;
}

ClassType SeriesLabel::type() const {
  ClassType t;
  for (const auto& [d, lambda] : components) t.entries.emplace_back(d, lambda.size());
  std::sort(t.entries.begin(), t.entries.end());
  return t;
}

BigInt gl_order_pprime(int n, const BigInt& q) {
  BigInt r = 1;
  BigInt qj = 1;
  for (int j = 1; j <= n; ++j) {
    qj *= q;
    r *= qj - 1;
  }
  return r;
}

BigInt gl_order(int n, const BigInt& q) {
  if (n < 0 || q < 2) throw ArgumentError("gl_order: need n >= 0 and q >= 2");
  return big_pow(q, static_cast<unsigned long>(n * (n - 1) / 2)) * gl_order_pprime(n, q);
}

BigInt torus_order(const Partition& lambda, const BigInt& q) {
  BigInt r = 1;
  for (int part : lambda.parts()) r *= big_pow(q, static_cast<unsigned long>(part)) - 1;
  return r;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

BigInt falling_factorial(const BigInt& x, int k) {
  BigInt r = 1;
  for (int t = 0; t < k; ++t) r *= x - t;
  return r;
}

}  // namespace

BigInt irreducible_poly_count(int d, const BigInt& q) {
  if (d < 1) throw ArgumentError("irreducible_poly_count: d must be >= 1");
  BigInt sum = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) sum += mobius(d / e) * big_pow(q, static_cast<unsigned long>(e));
  return exact_div(sum, d);
}

BigInt available_polys(int d, const BigInt& q) { return d == 1 ? BigInt(q - 1) : irreducible_poly_count(d, q); }

namespace {

void check_gl_bound(int n, const char* what) {
  if (n > limits().gl_enumeration_max_n)
    throw ResourceError(std::string(what) + ": n = " + std::to_string(n) + " exceeds GL enumeration bound " +
                        std::to_string(limits().gl_enumeration_max_n));
}

// Number of ways to pick distinct polynomials of degree d for the given
// multiplicities: falling(available, k) / prod(repeat counts)!.
BigInt polynomial_choices(const BigInt& available, const std::vector<int>& multiplicities) {
  const int k = static_cast<int>(multiplicities.size());
  if (available < k) return 0;
  BigInt r = falling_factorial(available, k);
  for (std::size_t i = 0; i < multiplicities.size();) {
    std::size_t j = i;
    while (j < multiplicities.size() && multiplicities[j] == multiplicities[i]) ++j;
    r = exact_div(r, factorial(j - i));
    i = j;
  }
  return r;
}

void enumerate_types(int d, int remaining, std::uint64_t q, ClassType& current, BigInt count, std::vector<ClassTypeCount>& out) {
  if (remaining == 0) {
    out.push_back({current, count});
    return;
  }
  if (d > remaining) return;
  const BigInt available = available_polys(d, q);
  for (int s = 0; s * d <= remaining; ++s) {
    for (const auto& mu : enumerate_partitions(s)) {
      const std::size_t mark = current.entries.size();
      for (int m : mu.parts()) current.entries.emplace_back(d, m);
      enumerate_types(d + 1, remaining - s * d, q, current, count * polynomial_choices(available, mu.parts()), out);
      current.entries.resize(mark);
    }
  }
}

}  // namespace

std::vector<ClassTypeCount> enumerate_class_types(int n, std::uint64_t q) {
  if (n < 0) throw ArgumentError("enumerate_class_types: n must be non-negative");
  characteristic(q);
  check_gl_bound(n, "enumerate_class_types");
  std::vector<ClassTypeCount> out;
  ClassType current;
  enumerate_types(1, n, q, current, 1, out);
  for (auto& t : out) std::sort(t.type.entries.begin(), t.type.entries.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.type < b.type; });
  return out;
}

namespace {

BigInt q_integer(int m, const BigInt& q) { return exact_div(big_pow(q, static_cast<unsigned long>(m)) - 1, q - 1); }

unsigned long a_value(const Partition& lambda) {
  unsigned long a = 0;
  for (int i = 0; i < lambda.length(); ++i) a += static_cast<unsigned long>(i) * static_cast<unsigned long>(lambda[static_cast<std::size_t>(i)]);
  return a;
}

using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic divisor.
Poly poly_div_exact(Poly a, const Poly& monic) {
  const std::size_t db = monic.size() - 1;
  if (a.size() < monic.size()) throw VerificationFailure("polynomial division: degree too small");
  Poly quotient(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const BigInt c = a[i];
    quotient[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * monic[j];
  }
  for (const auto& c : a)
    if (c != 0) throw VerificationFailure("polynomial division: nonzero remainder");
  return quotient;
}

Poly q_integer_poly(int m) { return Poly(static_cast<std::size_t>(m), BigInt(1)); }

}  // namespace

BigInt unipotent_degree(const Partition& lambda, const BigInt& q) {
  if (q < 2) throw ArgumentError("unipotent_degree: q must be >= 2");
  BigInt numerator = 1, denominator = 1;
  for (int m = 1; m <= lambda.size(); ++m) numerator *= q_integer(m, q);
  for (int h : hook_lengths(lambda).lengths) denominator *= q_integer(h, q);
  return big_pow(q, a_value(lambda)) * exact_div(numerator, denominator);
}

std::vector<BigInt> unipotent_degree_polynomial(const Partition& lambda) {
  Poly numerator{1};
  for (int m = 1; m <= lambda.size(); ++m) numerator = poly_mul(numerator, q_integer_poly(m));
  for (int h : hook_lengths(lambda).lengths) numerator = poly_div_exact(std::move(numerator), q_integer_poly(h));
  Poly shifted(a_value(lambda), 0);
  shifted.insert(shifted.end(), numerator.begin(), numerator.end());
  return shifted;
}

BigInt centralizer_order(const ClassType& type, std::uint64_t q) {
  BigInt r = 1;
  for (const auto& [d, m] : type.entries) r *= gl_order(m, big_pow(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned long>(d)));
  return r;
}

BigInt green_degree(const SeriesLabel& label, std::uint64_t q) {
  const BigInt qq = static_cast<unsigned long>(q);
  BigInt centralizer_pprime = 1, unipotent = 1;
  for (const auto& [d, lambda] : label.components) {
    const BigInt qd = big_pow(qq, static_cast<unsigned long>(d));
    centralizer_pprime *= gl_order_pprime(lambda.size(), qd);
    unipotent *= unipotent_degree(lambda, qd);
  }
  return exact_div(gl_order_pprime(label.rank(), qq), centralizer_pprime) * unipotent;
}

namespace {

// Multisets of `count` partitions of m, each with the number of ways to
// assign them to `count` distinct polynomials.
void partition_multisets(const std::vector<Partition>& options, std::size_t index, int count, std::vector<Partition>& chosen,
                         BigInt ways_denominator, std::vector<std::pair<std::vector<Partition>, BigInt>>& out, int total) {
  if (count == 0) {
    out.emplace_back(chosen, exact_div(factorial(static_cast<unsigned long>(total)), ways_denominator));
    return;
  }
  if (index == options.size()) return;
  for (int c = count; c >= 0; --c) {
    for (int t = 0; t < c; ++t) chosen.push_back(options[index]);
    partition_multisets(options, index + 1, count - c, chosen, ways_denominator * factorial(static_cast<unsigned long>(c)), out, total);
    chosen.resize(chosen.size() - static_cast<std::size_t>(c));
  }
}

}  // namespace

std::vector<std::pair<SeriesLabel, BigInt>> series_labels(int n, std::uint64_t q) {
  std::vector<std::pair<SeriesLabel, BigInt>> out;
  for (const auto& [type, classes] : enumerate_class_types(n, q)) {
    if (classes == 0) continue;
    // Group equal (d, m) entries; each group is filled independently.
    std::vector<std::vector<std::pair<std::vector<Partition>, BigInt>>> groups;
    std::vector<std::pair<int, int>> group_keys;
    for (std::size_t i = 0; i < type.entries.size();) {
      std::size_t j = i;
      while (j < type.entries.size() && type.entries[j] == type.entries[i]) ++j;
      const int count = static_cast<int>(j - i);
      const auto options = enumerate_partitions(type.entries[i].second);
      std::vector<Partition> chosen;
      std::vector<std::pair<std::vector<Partition>, BigInt>> fills;
      partition_multisets(options, 0, count, chosen, 1, fills, count);
      groups.push_back(std::move(fills));
      group_keys.push_back(type.entries[i]);
      i = j;
    }
    std::vector<std::size_t> pick(groups.size(), 0);
    while (true) {
      SeriesLabel label;
      BigInt mult = classes;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& [parts, ways] = groups[g][pick[g]];
        for (const auto& lambda : parts) label.components.emplace_back(group_keys[g].first, lambda);
        mult *= ways;
      }
      out.emplace_back(std::move(label), std::move(mult));
      std::size_t g = 0;
      for (; g < groups.size(); ++g) {
        if (++pick[g] < groups[g].size()) break;
        pick[g] = 0;
      }
      if (g == groups.size()) break;
    }
  }
  return out;
}

DegreeMultiset all_degrees(int n, std::uint64_t q) {
  const auto labels = series_labels(n, q);
  const auto degrees = parallel_map<BigInt>(labels.size(), [&](std::size_t i) { return green_degree(labels[i].first, q); });
  std::map<BigInt, BigInt> entries;
  for (std::size_t i = 0; i < labels.size(); ++i) entries[degrees[i]] += labels[i].second;
  return DegreeMultiset(std::move(entries), gl_order(n, static_cast<unsigned long>(q)));
}

BigInt irr_pprime_count_gl(int n, std::uint64_t q) {
  if (n < 1) throw ArgumentError("irr_pprime_count_gl: n must be >= 1");
  characteristic(q);
  const BigInt qq = static_cast<unsigned long>(q);
  return (qq - 1) * big_pow(qq, static_cast<unsigned long>(n - 1));
}

BigInt irr_pprime_count_gl_enumerated(int n, std::uint64_t q) {
  BigInt total = 0;
  for (const auto& [label, mult] : series_labels(n, q)) {
    const bool all_rows = std::all_of(label.components.begin(), label.components.end(),
                                      [](const auto& c) { return c.second.length() <= 1; });
    if (all_rows) total += mult;
  }
  return total;
}

BigInt maslowski_local_count(int n, std::uint64_t q) {
  if (n < 1) throw ArgumentError("maslowski_local_count: n must be >= 1");
  characteristic(q);
  // |F_q^x| * |F_q|^{n-1}, counted as monic degree-n polynomials with
  // nonzero constant term: q^n total minus the q^{n-1} divisible by X.
  const BigInt qq = static_cast<unsigned long>(q);
  return big_pow(qq, static_cast<unsigned long>(n)) - big_pow(qq, static_cast<unsigned long>(n - 1));
}

}  // namespace blockcraft
