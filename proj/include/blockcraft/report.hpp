#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockcraft/bigint.hpp"

namespace blockcraft {

enum class Conjecture { mckay, alperin_mckay, bhz, nakayama_oracle, ms10, sum_squares, block_census };

std::string_view to_string(Conjecture c);

/// One checked instance: both sides of a count and whether they agree. For
/// BHZ the two sides are the truth values (0/1) of "all heights are zero" and
/// "the defect group is abelian".
struct VerificationReport {
  Conjecture conjecture = Conjecture::mckay;
  std::vector<std::pair<std::string, std::string>> parameters;
  BigInt global_count = 0;
  BigInt local_count = 0;
  bool passed = false;
  std::int64_t elapsed_ms = 0;
  std::vector<std::string> notes;

  VerificationReport& param(std::string name, std::string value) {
    parameters.emplace_back(std::move(name), std::move(value));
    return *this;
  }
  VerificationReport& param(std::string name, long value) { return param(std::move(name), std::to_string(value)); }

  /// Sets both counts and passed = (global == local).
  void settle(BigInt global, BigInt local) {
    global_count = std::move(global);
    local_count = std::move(local);
    passed = global_count == local_count;
  }
};

/// Measures wall time since construction; stop() stores it in the report.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  void stop() {
    report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

enum class ReportFormat { json, csv, text };

ReportFormat parse_report_format(std::string_view name);

/// Sorts by conjecture, then parameter values (numerically where both sides
/// are integers), so emitted output is independent of evaluation order.
void sort_reports(std::vector<VerificationReport>& reports);

/// Serializes reports. JSON keys appear in field order with big integers as
/// decimal strings; CSV has header conjecture,params,global,local,passed,elapsed_ms.
std::string emit_report(const std::vector<VerificationReport>& reports, ReportFormat format);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace blockcraft
