#pragma once

namespace blockcraft {

/// Resource bounds for the brute-force paths. BLOCKCRAFT_MAX_N, when set to a
/// positive integer, replaces every bound below.
struct Limits {
  int table_max_n = 10;
  int idempotent_max_n = 6;
  int gl_enumeration_max_n = 6;
  /// Smallest ell for which unipotent block labels are reported as verified.
  int unipotent_block_min_ell = 7;
};

Limits& limits();

/// Re-reads BLOCKCRAFT_MAX_N from the environment.
void reload_limits_from_env();

}  // namespace blockcraft
