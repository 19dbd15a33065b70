#pragma once

#include <map>
#include <vector>

#include "blockcraft/bigint.hpp"
#include "blockcraft/partition.hpp"
#include "blockcraft/report.hpp"

namespace blockcraft {

/// Nakayama label of a p-block of S_n: its p-core and weight.
struct SymBlockLabel {
  unsigned p = 2;
  Partition core;
  int weight = 0;
  int n = 0;

  /// Throws ArgumentError unless core is a p-core and p is prime.
  static SymBlockLabel make(unsigned p, Partition core, int weight);

  bool operator==(const SymBlockLabel&) const = default;
};

struct BlockCharacterData {
  SymBlockLabel label;
  /// In enumerate_partitions order.
  std::vector<Partition> members;
  std::map<Partition, unsigned> heights;
  /// p^{nu_p((p w)!)}
  BigInt defect_group_order = 1;

  std::size_t height_zero_count() const;
};

SymBlockLabel block_of(const Partition& lambda, unsigned p);

/// All block labels of S_n for the prime p, ordered by weight then core.
std::vector<SymBlockLabel> block_labels(int n, unsigned p);

BlockCharacterData block_members_and_heights(const SymBlockLabel& label);

/// all heights zero <=> w < p (abelian defect group Sylow_p(S_{pw})).
VerificationReport bhz_verify(const SymBlockLabel& label);

/// First lambda |- 2w (enumerate_partitions order) with empty 2-core and even
/// degree. Throws ArgumentError for w < 2 and VerificationFailure if the
/// search comes up empty.
Partition bhz_witness_search(int w);

/// |Irr(B)| against |Irr((C_p : C_{p-1}) wr S_w)| for w < p, with the height
/// zero checks on both sides. Throws UnsupportedRegime for w >= p.
VerificationReport am_verify_abelian(const SymBlockLabel& label);

/// Same p-core partition of {lambda |- n}, in the layout of
/// BlockPartitionOracle::blocks.
std::vector<std::vector<Partition>> nakayama_blocks(int n, unsigned p);

/// Central-character blocks against Nakayama blocks.
VerificationReport nakayama_oracle_verify(int n, unsigned p);

/// Per block: member count by core filter against the p-quotient count.
std::vector<VerificationReport> sym_block_census(int n, unsigned p);

/// |Irr_p'(S_n)| against the local side; the local side is only known here
/// for p = 2 (self-normalising Sylow subgroup).
VerificationReport sym_mckay_verify(int n, unsigned p);

}  // namespace blockcraft
