#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "blockcraft/bigint.hpp"
#include "blockcraft/partition.hpp"
#include "blockcraft/wreath_local.hpp"

namespace blockcraft {

/// Factorisation type of the characteristic polynomial of a semisimple class
/// of GL_n(q): a multiset of (polynomial degree d, multiplicity m) pairs with
/// sum d*m = n. Entries are kept sorted.
struct ClassType {
  std::vector<std::pair<int, int>> entries;

  int rank() const;
  bool operator==(const ClassType&) const = default;
  auto operator<=>(const ClassType&) const = default;
};

struct ClassTypeCount {
  ClassType type;
  BigInt classes;
};

/// Label of a Lusztig series member rho^{s, lambda}: one (d, lambda) per
/// elementary divisor of s, where |lambda| is the multiplicity. Only the
/// type of s matters for degrees.
struct SeriesLabel {
  std::vector<std::pair<int, Partition>> components;

  int rank() const;
  ClassType type() const;
};

/// |GL_n(q)| = q^{n(n-1)/2} prod_{j=1}^{n} (q^j - 1)
BigInt gl_order(int n, const BigInt& q);

/// p'-part of |GL_n(q)|: prod_{j=1}^{n} (q^j - 1).
BigInt gl_order_pprime(int n, const BigInt& q);

/// prod_i (q^{lambda_i} - 1)
BigInt torus_order(const Partition& lambda, const BigInt& q);

/// Monic irreducible polynomials of degree d over F_q (Moebius count).
BigInt irreducible_poly_count(int d, const BigInt& q);

/// Irreducible polynomials of degree d that may occur as elementary divisors
/// of an invertible matrix: q - 1 for d = 1 (X excluded), N_d(q) otherwise.
BigInt available_polys(int d, const BigInt& q);

/// Every class type of GL_n(q) with its number of semisimple classes. Types
/// that need more distinct polynomials than exist are kept with count 0.
/// Throws ResourceError above limits().gl_enumeration_max_n.
std::vector<ClassTypeCount> enumerate_class_types(int n, std::uint64_t q);

/// q^{a(lambda)} [n]_q! / prod_h [h]_q
BigInt unipotent_degree(const Partition& lambda, const BigInt& q);

/// Coefficients (constant term first) of the unipotent degree as a
/// polynomial in q.
std::vector<BigInt> unipotent_degree_polynomial(const Partition& lambda);

/// |G : C(s)|_{p'} * prod_i unipotent_degree(lambda^i, q^{d_i})
BigInt green_degree(const SeriesLabel& label, std::uint64_t q);

/// |C_{GL_n(q)}(s)| = prod_i |GL_{m_i}(q^{d_i})|
BigInt centralizer_order(const ClassType& type, std::uint64_t q);

/// Every series label up to the choice of polynomials, paired with the number
/// of irreducible characters that share it.
std::vector<std::pair<SeriesLabel, BigInt>> series_labels(int n, std::uint64_t q);

/// Degrees of all irreducible characters of GL_n(q) via Green's parameterisation.
DegreeMultiset all_degrees(int n, std::uint64_t q);

/// |Irr_{p'}(GL_n(q))| = (q - 1) q^{n-1}
BigInt irr_pprime_count_gl(int n, std::uint64_t q);

/// Counts characters rho^{s, lambda} with every lambda^i = (m_i).
BigInt irr_pprime_count_gl_enumerated(int n, std::uint64_t q);

/// Maslowski's local parameterisation: |F_q^x x F_q^{n-1}|.
BigInt maslowski_local_count(int n, std::uint64_t q);

}  // namespace blockcraft
