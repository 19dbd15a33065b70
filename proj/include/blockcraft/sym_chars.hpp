#pragma once

#include <cstdint>
#include <vector>

#include "blockcraft/bigint.hpp"
#include "blockcraft/partition.hpp"

namespace blockcraft {

/// Character table of S_n. Rows follow enumerate_partitions(n) for the
/// characters, columns follow the same order for cycle types.
struct SymCharacterTable {
  int n = 0;
  std::vector<Partition> labels;
  std::vector<Partition> classes;
  std::vector<BigInt> class_sizes;
  /// values[i][j] = chi^{labels[i]}(classes[j])
  std::vector<std::vector<BigInt>> values;

  std::size_t index_of_character(const Partition& lambda) const;
  std::size_t index_of_class(const Partition& rho) const;
};

/// Partition of {lambda |- n} into p-blocks. Blocks are sorted; each block's
/// members follow enumerate_partitions order.
struct BlockPartitionOracle {
  int n = 0;
  int p = 0;
  std::vector<std::vector<Partition>> blocks;
};

/// n! / prod(hook lengths)
BigInt sym_degree(const Partition& lambda);

/// nu_p(chi^lambda(1)) from Legendre's formula and the hook valuations.
unsigned sym_degree_valuation(const Partition& lambda, unsigned p);

/// #{lambda |- n : p does not divide chi^lambda(1)}
BigInt irr_pprime_count_sym(int n, unsigned p);

/// 2^(k_1 + k_2 + ...) for n = 2^k_1 + 2^k_2 + ...
BigInt macdonald_count(int n);

/// |Irr_2'(N_{S_n}(P))| for P a Sylow 2-subgroup. P is self-normalising and
/// is a product of iterated wreath products C_2 wr ... wr C_2, one per binary
/// digit of n; each factor's odd-degree characters are counted from its
/// degree multiset.
BigInt sylow2_local_count(int n);

/// |x^G| for the class of cycle type rho in S_n.
BigInt sym_class_size(const Partition& rho);

/// Full table through the Murnaghan-Nakayama rule. Rows are built in parallel.
/// Throws ResourceError above limits().table_max_n.
SymCharacterTable build_table(int n);

/// sum_rho |rho^G| chi(rho) psi(rho) = delta n! for every pair of rows.
bool row_orthogonality_holds(const SymCharacterTable& table);
/// sum_chi chi(rho) chi(sigma) = delta |C(rho)| for every pair of columns.
bool column_orthogonality_holds(const SymCharacterTable& table);

/// Brute-force p-blocks: lambda ~ mu iff |x^G| chi(x)/chi(1) agree mod p
/// on every class, closed transitively.
BlockPartitionOracle central_character_blocks(int n, unsigned p);
BlockPartitionOracle central_character_blocks(const SymCharacterTable& table, unsigned p);

/// Element of the class algebra Z(QS_n): one coefficient per class sum.
struct ClassAlgebraElement {
  std::vector<BigRat> coefficients;
};

/// Block idempotent restricted to p-regular classes:
/// coefficient of class g = (1/|G|) sum_{chi in block} chi(1) chi(g).
ClassAlgebraElement block_idempotent(const SymCharacterTable& table, const std::vector<Partition>& block, unsigned p);

/// Product in the class algebra via integral structure constants.
ClassAlgebraElement class_algebra_multiply(const SymCharacterTable& table, const ClassAlgebraElement& a,
                                          const ClassAlgebraElement& b);

/// True iff the block idempotent is p-integral, equals the unrestricted sum of
/// the primitive central idempotents of its characters (so vanishes on
/// p-singular classes), and squares to itself. Throws ResourceError above
/// limits().idempotent_max_n.
bool block_idempotent_p_integral(int n, unsigned p, const std::vector<Partition>& block);
bool block_idempotent_p_integral(const SymCharacterTable& table, unsigned p, const std::vector<Partition>& block);

}  // namespace blockcraft
