#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "blockcraft/report.hpp"

namespace blockcraft {

/// Flat key-grid sweep: every check runs over the product of the keys it uses.
///   checks = sym.mckay, gl.mckay
///   n = 1..6
///   p = 2,3,5
/// Keys: checks, n, p, q, ell. Values are comma lists of integers or a..b ranges.
struct SweepConfig {
  std::vector<std::string> checks;
  std::vector<long> n, p, q, ell;
};

SweepConfig parse_sweep_config(std::istream& in);

struct SweepResult {
  std::vector<VerificationReport> reports;
  /// One line per skipped cell, in cell order.
  std::vector<std::string> skipped;
};

/// Runs every cell concurrently. Cells whose parameters violate a
/// precondition are skipped, not reported.
SweepResult run_sweep(const SweepConfig& config);

/// Entry point shared by the executable and the tests. args excludes the
/// program name. Returns 0 if every report passed, 2 if some verification
/// failed, 1 on usage or resource errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockcraft
