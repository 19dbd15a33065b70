#include "blockcraft/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "blockcraft/config.hpp"
#include "blockcraft/glq_chars.hpp"
#include "blockcraft/glq_mckay_blocks.hpp"
#include "blockcraft/parallel.hpp"
#include "blockcraft/sym_blocks.hpp"
#include "blockcraft/sym_chars.hpp"

namespace blockcraft {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw ArgumentError("sweep config: not an integer: '" + s + "'");
  }
  if (used != s.size()) throw ArgumentError("sweep config: not an integer: '" + s + "'");
  return v;
}

std::vector<long> parse_values(const std::string& text) {
  std::vector<long> out;
  for (const auto& item : split(text, ',')) {
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const long lo = parse_long(trim(item.substr(0, dots)));
      const long hi = parse_long(trim(item.substr(dots + 2)));
      if (hi < lo) throw ArgumentError("sweep config: empty range " + item);
      for (long v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_long(item));
    }
  }
  return out;
}

// Sanity bounds for command arguments; heavy paths have their own limits.
constexpr long kMaxArg = 1'000'000;

int as_int(long v, const char* name) {
  if (v < 0 || v > kMaxArg) throw ArgumentError(std::string(name) + " out of range: " + std::to_string(v));
  return static_cast<int>(v);
}

std::vector<VerificationReport> sym_table_reports(int n, std::string* table_text) {
  VerificationReport r;
  r.conjecture = Conjecture::sum_squares;
  r.param("group", "S").param("n", n);
  ReportTimer timer(r);
  const SymCharacterTable t = build_table(n);
  const std::size_t identity = t.index_of_class(Partition::column(n));
  BigInt squares = 0;
  for (const auto& row : t.values) squares += row[identity] * row[identity];
  r.settle(squares, factorial(static_cast<unsigned long>(n)));
  const bool rows = row_orthogonality_holds(t);
  const bool cols = column_orthogonality_holds(t);
  r.notes.push_back(std::string("row orthogonality ") + (rows ? "holds" : "FAILS"));
  r.notes.push_back(std::string("column orthogonality ") + (cols ? "holds" : "FAILS"));
  r.passed = r.passed && rows && cols;
  timer.stop();

  if (table_text) {
    std::ostringstream os;
    os << "S_" << n << " character table (rows: characters, columns: cycle types)\n";
    os << "class";
    for (const auto& rho : t.classes) os << '\t' << rho.str();
    os << "\nsize";
    for (const auto& s : t.class_sizes) os << '\t' << to_string(s);
    os << '\n';
    for (std::size_t i = 0; i < t.labels.size(); ++i) {
      os << t.labels[i].str();
      for (const auto& v : t.values[i]) os << '\t' << to_string(v);
      os << '\n';
    }
    *table_text = os.str();
  }
  return {r};
}

std::vector<VerificationReport> gl_degrees_reports(int n, std::uint64_t q) {
  VerificationReport r;
  r.conjecture = Conjecture::sum_squares;
  r.param("group", "GL").param("n", n).param("q", static_cast<long>(q));
  ReportTimer timer(r);
  // DegreeMultiset checks its own sum of squares; compare against |GL_n(q)| separately.
  const DegreeMultiset degrees = all_degrees(n, q);
  r.settle(degrees.sum_of_squares(), gl_order(n, BigInt(static_cast<unsigned long>(q))));
  r.notes.push_back("characters=" + to_string(degrees.character_count()));
  timer.stop();
  return {r};
}

std::vector<VerificationReport> sym_bhz_reports(int n, unsigned p) {
  std::vector<VerificationReport> out;
  for (const auto& label : block_labels(n, p)) out.push_back(bhz_verify(label));
  return out;
}

std::vector<VerificationReport> sym_am_reports(int n, unsigned p, std::vector<std::string>& notes) {
  std::vector<VerificationReport> out;
  for (const auto& label : block_labels(n, p)) {
    if (label.weight >= static_cast<int>(p)) {
      notes.push_back("skipped block core=" + label.core.str() + " w=" + std::to_string(label.weight) +
                      ": defect group is not abelian");
      continue;
    }
    out.push_back(am_verify_abelian(label));
  }
  if (out.empty()) throw UnsupportedRegime("sym am: no block of S_" + std::to_string(n) + " has weight < p");
  return out;
}

std::vector<VerificationReport> gl_mckay_reports(int n, std::uint64_t q, unsigned ell) {
  if (is_prime(ell) && q % ell == 0) return {defining_char_mckay_verify(n, q)};
  return {ms10_verify(n, q, ell)};
}

std::vector<VerificationReport> gl_blocks_reports(int n, std::uint64_t q, unsigned ell) {
  return unipotent_block_census(n, EllContext::make(q, ell));
}

struct Cell {
  std::string check;
  long n = 0, p = 0, q = 0, ell = 0;

  std::string describe() const {
    std::string s = check + " n=" + std::to_string(n);
    if (check.starts_with("gl")) s += " q=" + std::to_string(q);
    else if (check != "sym.table") s += " p=" + std::to_string(p);
    if (check == "gl.mckay" || check == "gl.blocks") s += " ell=" + std::to_string(ell);
    return s;
  }
};

std::vector<VerificationReport> run_cell(const Cell& c, std::vector<std::string>& notes) {
  const int n = as_int(c.n, "n");
  if (c.check == "sym.mckay") return {sym_mckay_verify(n, static_cast<unsigned>(as_int(c.p, "p")))};
  if (c.check == "sym.blocks") return sym_block_census(n, static_cast<unsigned>(as_int(c.p, "p")));
  if (c.check == "sym.table") return sym_table_reports(n, nullptr);
  if (c.check == "sym.bhz") return sym_bhz_reports(n, static_cast<unsigned>(as_int(c.p, "p")));
  if (c.check == "sym.am") return sym_am_reports(n, static_cast<unsigned>(as_int(c.p, "p")), notes);
  if (c.check == "oracle.nakayama") return {nakayama_oracle_verify(n, static_cast<unsigned>(as_int(c.p, "p")))};
  const auto q = static_cast<std::uint64_t>(as_int(c.q, "q"));
  if (c.check == "gl.degrees") return gl_degrees_reports(n, q);
  const auto ell = static_cast<unsigned>(as_int(c.ell, "ell"));
  if (c.check == "gl.mckay") {
    if (is_prime(ell) && q % ell == 0) throw ArgumentError("ell divides q");
    return {ms10_verify(n, q, ell)};
  }
  if (c.check == "gl.blocks") return gl_blocks_reports(n, q, ell);
  throw ArgumentError("unknown check " + c.check);
}

const std::map<std::string, std::vector<std::string>>& check_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"sym.mckay", {"n", "p"}},       {"sym.blocks", {"n", "p"}},       {"sym.table", {"n"}},
      {"sym.bhz", {"n", "p"}},         {"sym.am", {"n", "p"}},           {"oracle.nakayama", {"n", "p"}},
      {"gl.degrees", {"n", "q"}},      {"gl.mckay", {"n", "q", "ell"}}, {"gl.blocks", {"n", "q", "ell"}},
  };
  return keys;
}

void zero_timings(std::vector<VerificationReport>& reports) {
  for (auto& r : reports) r.elapsed_ms = 0;
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ArgumentError("sweep config line " + std::to_string(line_no) + ": expected key = values");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = line.substr(eq + 1);
    if (key == "checks") {
      for (const auto& c : split(value, ',')) {
        if (!check_keys().contains(c)) throw ArgumentError("sweep config: unknown check '" + c + "'");
        config.checks.push_back(c);
      }
    } else if (key == "n") {
      config.n = parse_values(value);
    } else if (key == "p") {
      config.p = parse_values(value);
    } else if (key == "q") {
      config.q = parse_values(value);
    } else if (key == "ell") {
      config.ell = parse_values(value);
    } else {
      throw ArgumentError("sweep config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (config.checks.empty()) throw ArgumentError("sweep config: no checks listed");
  for (const auto& check : config.checks)
    for (const auto& key : check_keys().at(check)) {
      const auto& values = key == "n" ? config.n : key == "p" ? config.p : key == "q" ? config.q : config.ell;
      if (values.empty()) throw ArgumentError("sweep config: check " + check + " needs key '" + key + "'");
    }
  return config;
}

SweepResult run_sweep(const SweepConfig& config) {
  std::vector<Cell> cells;
  const std::vector<long> none{0};
  for (const auto& check : config.checks) {
    const auto& keys = check_keys().at(check);
    auto uses = [&](const char* k) { return std::find(keys.begin(), keys.end(), k) != keys.end(); };
    for (long n : config.n)
      for (long p : uses("p") ? config.p : none)
        for (long q : uses("q") ? config.q : none)
          for (long ell : uses("ell") ? config.ell : none) cells.push_back({check, n, p, q, ell});
  }

  struct CellOutcome {
    std::vector<VerificationReport> reports;
    std::vector<std::string> notes;
    std::exception_ptr resource_failure;
  };
  auto outcomes = parallel_map<CellOutcome>(cells.size(), [&](std::size_t i) {
    CellOutcome o;
    try {
      o.reports = run_cell(cells[i], o.notes);
    } catch (const ArgumentError& e) {
      o.notes.push_back(e.what());
      o.reports.clear();
    } catch (const UnsupportedRegime& e) {
      o.notes.push_back(e.what());
      o.reports.clear();
    } catch (const ResourceError&) {
      o.resource_failure = std::current_exception();
    }
    return o;
  });

  SweepResult result;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& o = outcomes[i];
    if (o.resource_failure) std::rethrow_exception(o.resource_failure);
    for (const auto& note : o.notes) result.skipped.push_back("skipped " + cells[i].describe() + ": " + note);
    for (auto& r : o.reports) result.reports.push_back(std::move(r));
  }
  return result;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of local-global counting conjectures for S_n and GL_n(q)", "blockcraft"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  unsigned workers = 0;
  bool timing = false;
  app.add_option("--format", format_name, "Report format: json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
  app.add_flag("--timing", timing, "Record wall time in elapsed_ms (otherwise 0, for byte-stable output)");

  long n = 0, p = 0, q = 0, ell = 0;
  std::string config_path;
  std::function<std::vector<VerificationReport>()> action;
  std::string table_text;
  std::vector<std::string> side_notes;

  auto add_n = [&](CLI::App* c) { c->add_option("--n", n, "Degree / rank")->required()->check(CLI::NonNegativeNumber); };
  auto add_p = [&](CLI::App* c) { c->add_option("--p", p, "Prime")->required()->check(CLI::PositiveNumber); };
  auto add_q = [&](CLI::App* c) { c->add_option("--q", q, "Prime power")->required()->check(CLI::PositiveNumber); };
  auto add_ell = [&](CLI::App* c) { c->add_option("--ell", ell, "Prime")->required()->check(CLI::PositiveNumber); };

  auto* sym = app.add_subcommand("sym", "Symmetric groups")->require_subcommand(1);
  auto* sym_mckay = sym->add_subcommand("mckay", "McKay count |Irr_p'(S_n)| against the local side");
  add_n(sym_mckay);
  add_p(sym_mckay);
  sym_mckay->callback([&] { action = [&] { return std::vector{sym_mckay_verify(as_int(n, "n"), static_cast<unsigned>(p))}; }; });
  auto* sym_blocks = sym->add_subcommand("blocks", "p-block census with heights");
  add_n(sym_blocks);
  add_p(sym_blocks);
  sym_blocks->callback([&] { action = [&] { return sym_block_census(as_int(n, "n"), static_cast<unsigned>(p)); }; });
  auto* sym_table = sym->add_subcommand("table", "Character table with orthogonality checks");
  add_n(sym_table);
  sym_table->callback([&] { action = [&] { return sym_table_reports(as_int(n, "n"), &table_text); }; });
  auto* sym_bhz = sym->add_subcommand("bhz", "Height-zero condition for every block");
  add_n(sym_bhz);
  add_p(sym_bhz);
  sym_bhz->callback([&] { action = [&] { return sym_bhz_reports(as_int(n, "n"), static_cast<unsigned>(p)); }; });
  auto* sym_am = sym->add_subcommand("am", "Alperin-McKay counts for blocks with abelian defect");
  add_n(sym_am);
  add_p(sym_am);
  sym_am->callback([&] { action = [&] { return sym_am_reports(as_int(n, "n"), static_cast<unsigned>(p), side_notes); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles")->require_subcommand(1);
  auto* nakayama = oracle->add_subcommand("nakayama", "Central-character blocks against p-cores");
  add_n(nakayama);
  add_p(nakayama);
  nakayama->callback([&] { action = [&] { return std::vector{nakayama_oracle_verify(as_int(n, "n"), static_cast<unsigned>(p))}; }; });

  auto* gl = app.add_subcommand("gl", "General linear groups")->require_subcommand(1);
  auto* gl_degrees = gl->add_subcommand("degrees", "All degrees; sum of squares against |GL_n(q)|");
  add_n(gl_degrees);
  add_q(gl_degrees);
  gl_degrees->callback([&] { action = [&] { return gl_degrees_reports(as_int(n, "n"), static_cast<std::uint64_t>(q)); }; });
  auto* gl_mckay = gl->add_subcommand("mckay", "McKay counts for ell not dividing q, or defining characteristic");
  add_n(gl_mckay);
  add_q(gl_mckay);
  add_ell(gl_mckay);
  gl_mckay->callback([&] {
    action = [&] { return gl_mckay_reports(as_int(n, "n"), static_cast<std::uint64_t>(q), static_cast<unsigned>(ell)); };
  });
  auto* gl_blocks = gl->add_subcommand("blocks", "Unipotent ell-block census");
  add_n(gl_blocks);
  add_q(gl_blocks);
  add_ell(gl_blocks);
  gl_blocks->callback([&] {
    action = [&] { return gl_blocks_reports(as_int(n, "n"), static_cast<std::uint64_t>(q), static_cast<unsigned>(ell)); };
  });

  auto* sweep = app.add_subcommand("sweep", "Run a key-grid sweep from a config file");
  sweep->add_option("--config", config_path, "Sweep config file")->required();
  sweep->callback([&] {
    action = [&] {
      std::ifstream in(config_path);
      if (!in) throw ArgumentError("cannot open sweep config " + config_path);
      SweepResult result = run_sweep(parse_sweep_config(in));
      side_notes = std::move(result.skipped);
      return std::move(result.reports);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    set_worker_count(workers);
    const ReportFormat format = parse_report_format(format_name);
    auto reports = action();
    if (!timing) zero_timings(reports);
    sort_reports(reports);
    for (const auto& note : side_notes) err << note << '\n';
    if (format == ReportFormat::text && !table_text.empty()) out << table_text;
    out << emit_report(reports, format);
    return all_passed(reports) ? 0 : 2;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace blockcraft
