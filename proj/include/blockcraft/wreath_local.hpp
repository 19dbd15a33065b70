#pragma once

#include <cstdint>
#include <map>

#include "blockcraft/bigint.hpp"

namespace blockcraft {

/// Irreducible character degrees of a finite group, with multiplicities.
/// The constructor checks sum(multiplicity * degree^2) == group order.
class DegreeMultiset {
 public:
  DegreeMultiset(std::map<BigInt, BigInt> entries, BigInt group_order);

  const std::map<BigInt, BigInt>& entries() const { return entries_; }
  const BigInt& group_order() const { return group_order_; }

  /// |Irr(G)|
  BigInt character_count() const;
  BigInt sum_of_squares() const;

  bool operator==(const DegreeMultiset&) const = default;

 private:
  std::map<BigInt, BigInt> entries_;
  BigInt group_order_;
};

DegreeMultiset trivial_group_degrees();

/// Cyclic group C_m acted on by C_d, generator acting on Irr(C_m) = Z_m as x -> u*x.
struct MetacyclicSpec {
  std::uint64_t m = 1;
  std::uint64_t d = 1;
  std::uint64_t u = 1;
};

/// Degrees of C_m : C_d. Each <u>-orbit of size o on Z_m gives d/o characters
/// of degree o. Throws ArgumentError unless u^d = 1 mod m.
DegreeMultiset metacyclic_degrees(const MetacyclicSpec& spec);

/// Degrees of base wr S_w. Characters correspond to functions phi from Irr(base)
/// to partitions with total size w; the degree is
/// w! * prod_chi chi(1)^|phi(chi)| * f^{phi(chi)} / |phi(chi)|!.
DegreeMultiset wreath_degrees(const DegreeMultiset& base, int w);

/// Direct product G x H.
DegreeMultiset direct_product(const DegreeMultiset& a, const DegreeMultiset& b);

/// Number of characters of degree prime to ell.
BigInt irr_lprime_count(const DegreeMultiset& degrees, unsigned ell);

}  // namespace blockcraft
