#include "blockcraft/report.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace blockcraft {

std::string_view to_string(Conjecture c) {
  switch (c) {
    case Conjecture::mckay: return "mckay";
    case Conjecture::alperin_mckay: return "alperin_mckay";
    case Conjecture::bhz: return "bhz";
    case Conjecture::nakayama_oracle: return "nakayama_oracle";
    case Conjecture::ms10: return "ms10";
    case Conjecture::sum_squares: return "sum_squares";
    case Conjecture::block_census: return "block_census";
  }
  return "unknown";
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw ArgumentError("unknown report format '" + std::string(name) + "'");
}

namespace {

std::optional<long long> as_integer(const std::string& s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

int compare_values(const std::string& a, const std::string& b) {
  const auto ia = as_integer(a), ib = as_integer(b);
  if (ia && ib) return *ia < *ib ? -1 : (*ia > *ib ? 1 : 0);
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

bool report_less(const VerificationReport& x, const VerificationReport& y) {
  if (x.conjecture != y.conjecture) return to_string(x.conjecture) < to_string(y.conjecture);
  const std::size_t n = std::min(x.parameters.size(), y.parameters.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.parameters[i].first != y.parameters[i].first) return x.parameters[i].first < y.parameters[i].first;
    if (const int c = compare_values(x.parameters[i].second, y.parameters[i].second); c != 0) return c < 0;
  }
  return x.parameters.size() < y.parameters.size();
}

std::string params_string(const VerificationReport& r) {
  std::string s;
  for (const auto& [k, v] : r.parameters) {
    if (!s.empty()) s += ';';
    s += k + '=' + v;
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void sort_reports(std::vector<VerificationReport>& reports) { std::stable_sort(reports.begin(), reports.end(), report_less); }

std::string emit_report(const std::vector<VerificationReport>& reports, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        nlohmann::ordered_json obj;
        obj["conjecture"] = std::string(to_string(r.conjecture));
        auto params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.parameters) params[k] = v;
        obj["parameters"] = params;
        obj["global_count"] = r.global_count.get_str();
        obj["local_count"] = r.local_count.get_str();
        obj["passed"] = r.passed;
        obj["elapsed_ms"] = r.elapsed_ms;
        obj["notes"] = r.notes;
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case ReportFormat::csv:
      out << "conjecture,params,global,local,passed,elapsed_ms\n";
      for (const auto& r : reports)
        out << to_string(r.conjecture) << ',' << csv_field(params_string(r)) << ',' << r.global_count.get_str() << ','
            << r.local_count.get_str() << ',' << (r.passed ? "true" : "false") << ',' << r.elapsed_ms << '\n';
      break;
    case ReportFormat::text:
      for (const auto& r : reports) {
        out << (r.passed ? "PASS " : "FAIL ") << to_string(r.conjecture) << " [" << params_string(r) << "] global="
            << r.global_count.get_str() << " local=" << r.local_count.get_str() << " (" << r.elapsed_ms << " ms)\n";
        for (const auto& note : r.notes) out << "  - " << note << '\n';
      }
      break;
  }
  return out.str();
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

}  // namespace blockcraft
