#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "blockcraft/bigint.hpp"

namespace blockcraft {

/// A partition of n: weakly decreasing positive parts, no trailing zeros.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Accepts parts in any order and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);
  /// (1^n)
  static Partition column(int n);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;

  /// "(3,1,1)", "()" for the empty partition.
  std::string str() const;

  bool operator==(const Partition&) const = default;
  /// Lexicographic on parts.
  std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Hook length at each box, row by row.
struct HookMultiset {
  std::vector<int> lengths;
};

struct CoreQuotient {
  int d = 0;
  Partition core;
  int weight = 0;
  /// One partition per abacus runner 0..d-1.
  std::vector<Partition> quotient;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

/// p(n) by Euler's pentagonal recurrence.
BigInt partition_count(int n);

/// Number of k-tuples of partitions of total size w.
BigInt multipartition_count(int k, int w);

HookMultiset hook_lengths(const Partition& lambda);

int count_hooks(const Partition& lambda, int d);

/// Beta-set with `beads` beads: lambda_i + beads - 1 - i for i < beads.
std::vector<int> beta_set(const Partition& lambda, int beads);
Partition from_beta_set(std::vector<int> beta);

/// Abacus core and quotient. Beads are padded to the least multiple of d
/// that is >= length(lambda); the quotient does not depend on which multiple
/// is used.
CoreQuotient d_core_and_quotient(const Partition& lambda, int d);

/// Inverse of d_core_and_quotient.
Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient);

bool is_d_core(const Partition& lambda, int d);

/// All d-cores of size exactly m.
std::vector<Partition> enumerate_d_cores(int m, int d);

/// Number of partitions of n with d-core mu (0 if mu is not a d-core or the
/// sizes are incompatible). Computed through the d-quotient bijection; d = 1
/// is allowed (the only 1-core is the empty partition).
BigInt count_partitions_with_core(int n, int d, const Partition& mu);

/// Value of chi^lambda on the class of cycle type rho (Murnaghan-Nakayama).
BigInt mn_character_value(const Partition& lambda, const Partition& rho);

/// Clears the calling thread's Murnaghan-Nakayama memo.
void clear_mn_cache();

}  // namespace blockcraft

template <>
struct std::hash<blockcraft::Partition> : blockcraft::PartitionHash {};
