#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blockcraft/bigint.hpp"
#include "blockcraft/glq_chars.hpp"
#include "blockcraft/partition.hpp"
#include "blockcraft/report.hpp"
#include "blockcraft/wreath_local.hpp"

namespace blockcraft {

/// q, a prime ell not dividing q, and d = order of q mod ell.
struct EllContext {
  std::uint64_t q = 0;
  unsigned ell = 0;
  int d = 0;

  /// Validates and computes d. Throws ArgumentError if ell | q or ell is not prime.
  static EllContext make(std::uint64_t q, unsigned ell);
};

/// Unipotent ell-block of GL_n(q), labelled by a d-core and its weight.
struct GlUnipotentBlockLabel {
  EllContext context;
  Partition d_core;
  int weight = 0;
  int n = 0;
  /// The d-split Levi of the d-cuspidal pair as (a_i, m_i) for GL_{a_i}(q^{m_i}):
  /// w copies of (1, d) and one (|core|, 1) when the core is nonempty.
  std::vector<std::pair<int, int>> levi;
  /// False outside the ell >= limits().unipotent_block_min_ell regime.
  bool verified = true;
  std::string warning;

  bool operator==(const GlUnipotentBlockLabel& o) const { return d_core == o.d_core && weight == o.weight && n == o.n; }
};

/// Least d >= 1 with ell | q^d - 1.
int d_ell(std::uint64_t q, unsigned ell);

/// Phi_m(q) via Phi_m(q) = (q^m - 1) / prod_{e | m, e < m} Phi_e(q).
BigInt cyclotomic_value(int m, const BigInt& q);

/// ell | Phi_m(q) by evaluating Phi_m(q) exactly.
bool phi_divisibility_direct(int m, std::uint64_t q, unsigned ell);
/// ell | Phi_m(q) iff m is d, d*ell, d*ell^2, ...
bool phi_divisibility_lemma(int m, std::uint64_t q, unsigned ell);
/// Both paths; throws VerificationFailure if they disagree.
bool phi_divisibility(int m, std::uint64_t q, unsigned ell);

/// ell does not divide unipotent_degree(lambda, q).
bool unipotent_lprime_by_valuation(const Partition& lambda, const EllContext& ctx);
/// Hook criterion for ell > 2, n = w d + r with 0 <= r < d: exactly w hook
/// lengths of lambda are divisible by d, and nu_ell(prod h/d) = nu_ell(w!)
/// over those hooks.
bool unipotent_lprime_by_hooks(const Partition& lambda, const EllContext& ctx);
/// Valuation result; for ell > 2 also runs the hook criterion and throws
/// VerificationFailure on disagreement.
bool unipotent_is_lprime(const Partition& lambda, const EllContext& ctx);

/// nu_ell(|C(s)|) == nu_ell(|G|)
bool centralizes_sylow(const ClassType& type, const EllContext& ctx);
/// s centralises a Sylow ell-subgroup and every component is ell' in
/// context (q^{d_i}, ell). Throws VerificationFailure if this disagrees with
/// nu_ell(green_degree(label)) == 0.
bool series_is_lprime(const SeriesLabel& label, const EllContext& ctx);

/// |Irr_ell'(GL_n(q))| summed over series labels with series_is_lprime.
BigInt irr_lprime_count_gl(int n, const EllContext& ctx);

/// Degrees of M = (C_{q^d-1} : C_d) wr S_w x GL_r(q), n = w d + r.
DegreeMultiset local_overgroup_degrees(int n, const EllContext& ctx);
/// |Irr_ell'(M)|
BigInt local_overgroup_count(int n, const EllContext& ctx);

VerificationReport ms10_verify(int n, std::uint64_t q, unsigned ell);

/// Defining characteristic: enumerated |Irr_p'(GL_n(q))| against the
/// Maslowski local count.
VerificationReport defining_char_mckay_verify(int n, std::uint64_t q);

GlUnipotentBlockLabel unipotent_block_of(const Partition& lambda, const EllContext& ctx);

/// Unipotent characters in the block; the partition census, |Irr(C_d wr S_w)|
/// and the d-multipartition count are all computed and must agree.
BigInt unipotent_block_series_size(const GlUnipotentBlockLabel& label);

/// One block_census report per unipotent block of GL_n(q).
std::vector<VerificationReport> unipotent_block_census(int n, const EllContext& ctx);

}  // namespace blockcraft
