#include "crc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crc/crc_verify.hpp"
#include "crc/errors.hpp"
#include "crc/quantum_ring.hpp"
#include "crc/wdvv.hpp"
#include "json.hpp"

namespace crc {

namespace {

using nlohmann::ordered_json;

std::string command_name(Command c) {
  switch (c) {
    case Command::Tables: return "tables";
    case Command::Wdvv: return "wdvv";
    case Command::Charclass: return "charclass";
    case Command::Crc: return "crc";
    case Command::Invariants: return "invariants";
    case Command::All: return "all";
  }
  return "all";
}

std::vector<Space> spaces_of(SpaceChoice c) {
  switch (c) {
    case SpaceChoice::X: return {Space::X};
    case SpaceChoice::Y: return {Space::Y};
    case SpaceChoice::Both: return {Space::X, Space::Y};
  }
  return {};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw ConfigError("cannot write " + path);
  o << text;
}

CurveClass bound_for(Space space, const RunConfig& c, const CurveClass& fallback) {
  if (!c.maxBeta) return fallback;
  const auto& v = *c.maxBeta;
  std::size_t want = space == Space::X ? 1 : 2;
  if (v.size() != want)
    throw ConfigError("--max-beta for " + to_string(space) + " takes " + std::to_string(want) + " value(s)");
  for (int x : v)
    if (x < 0) throw ConfigError("--max-beta entries must be nonnegative");
  return space == Space::X ? CurveClass::x(v[0]) : CurveClass::y(v[0], v[1]);
}

InvariantTable table_for(Space space, const RunConfig& c, const SeedTables& seeds) {
  if (c.importPath) {
    auto t = table_from_json(read_file(*c.importPath));
    if (t.space() == space) return t;
  }
  return space == Space::X ? seeds.x : seeds.y;
}

std::string render_checks(const std::vector<CheckResult>& checks, Command cmd, Format f) {
  bool passed = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  if (f == Format::Json) {
    ordered_json j;
    j["command"] = command_name(cmd);
    j["checks"] = ordered_json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name}, {"anchor", c.anchor}, {"passed", c.passed}, {"detail", c.detail}});
    j["passed"] = passed;
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  std::size_t npass = 0;
  for (const auto& c : checks) {
    npass += c.passed;
    o << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.anchor << "]\n     " << c.detail << "\n";
  }
  o << npass << "/" << checks.size() << " checks passed\n";
  return o.str();
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void append(std::vector<CheckResult>& to, std::vector<CheckResult> from) {
  for (auto& c : from) to.push_back(std::move(c));
}

struct Output {
  std::string text;
  bool passed = true;
};

Output run_tables(const RunConfig& c) {
  if (c.q1 && c.space == SpaceChoice::X) throw ConfigError("--q1 applies to the resolution only");
  auto seeds = seed_tables();
  std::vector<std::string> parts;
  ordered_json all = ordered_json::array();
  for (auto s : spaces_of(c.space)) {
    auto table = table_for(s, c, seeds);
    std::string text;
    if (s == Space::X) {
      auto r = build_x_quantum_ring(table);
      text = c.format == Format::Json ? table_json(r, "X") : format_table(r);
    } else if (c.q1) {
      auto r = specialize_q1(build_y_quantum_ring(table), *c.q1);
      text = c.format == Format::Json ? table_json(r, "Y") : format_table(r);
    } else {
      auto r = build_y_quantum_ring(table);
      text = c.format == Format::Json ? table_json(r, "Y") : format_table(r);
    }
    if (c.format == Format::Json)
      all.push_back(ordered_json::parse(text));
    else
      parts.push_back((c.space == SpaceChoice::Both ? "QH(" + to_string(s) + ")\n" : "") + text);
  }
  if (c.format == Format::Json) return {(all.size() == 1 ? all[0] : all).dump(2) + "\n"};
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "\n") + p;
  return {out};
}

Output run_wdvv(const RunConfig& c) {
  if (c.maxBeta && c.space == SpaceChoice::Both) throw ConfigError("--max-beta needs --space X or --space Y");
  CheckOptions defaults;
  std::vector<CheckResult> checks;
  bool sweep = c.checkAll || !c.recursion;
  auto seeds = seed_tables();
  if (c.recursion) append(checks, recursion_checks(c.nMax));
  if (sweep) {
    for (auto s : spaces_of(c.space)) {
      auto table = table_for(s, c, seeds);
      if (s == Space::Y && c.recursion) table = recursion_table(run_recursion(c.nMax, false));
      auto bound = bound_for(s, c, s == Space::X ? defaults.xBound : defaults.yBound);
      append(checks, wdvv_checks(s, table, bound, c.threads));
    }
  }
  return {render_checks(checks, Command::Wdvv, c.format), all_passed(checks)};
}

Output run_crc(const RunConfig& c) {
  if (c.format == Format::Text) {
    auto checks = crc_checks(c.order);
    return {render_checks(checks, Command::Crc, c.format), all_passed(checks)};
  }
  if (c.order < 3) throw ConfigError("--order must be at least 3");
  auto cov = derive_change_of_variables();
  bool iso = isomorphism_report(cov).ok();
  auto cmp = compare_potentials(cov, 3);
  int tanOrder = 0;
  if (tan_identity(c.order)) {
    tanOrder = c.order;
  } else {
    for (int k = 3; k < c.order && tan_identity(k); ++k) tanOrder = k;
  }
  ordered_json j;
  j["isomorphism"] = iso;
  j["potential_residual_terms"] = cmp.residual_terms();
  j["tan_order"] = tanOrder;
  return {j.dump() + "\n", iso && cmp.ok() && tanOrder == c.order};
}

std::string list_table(const InvariantTable& t) {
  std::ostringstream o;
  for (const auto& [k, v] : t.entries()) o << to_string(t.model(), k) << " = " << v.to_string() << "\n";
  return o.str();
}

Output run_invariants(const RunConfig& c) {
  if (c.space == SpaceChoice::Both && (c.exportPath || c.verify))
    throw ConfigError("invariants: --export and --verify need --space X or --space Y");
  auto seeds = seed_tables();
  std::string out;
  ordered_json all = ordered_json::array();
  std::vector<CheckResult> checks;
  CheckOptions defaults;
  for (auto s : spaces_of(c.space)) {
    auto table = table_for(s, c, seeds);
    if (c.exportPath) write_file(*c.exportPath, table_to_json(table));
    if (c.format == Format::Json)
      all.push_back(ordered_json::parse(table_to_json(table)));
    else
      out += list_table(table);
    if (c.verify) {
      auto fallback = table.bound().value_or(s == Space::X ? defaults.xBound : defaults.yBound);
      append(checks, wdvv_checks(s, table, bound_for(s, c, fallback), c.threads));
    }
  }
  if (c.format == Format::Json) {
    if (checks.empty()) return {(all.size() == 1 ? all[0] : all).dump(2) + "\n"};
    ordered_json j = ordered_json::parse(render_checks(checks, Command::Invariants, c.format));
    j["tables"] = all;
    return {j.dump(2) + "\n", all_passed(checks)};
  }
  if (!checks.empty()) out += render_checks(checks, Command::Invariants, c.format);
  return {out, all_passed(checks)};
}

Output dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::Tables: return run_tables(c);
    case Command::Wdvv: return run_wdvv(c);
    case Command::Charclass: {
      auto checks = charclass_checks();
      return {render_checks(checks, c.command, c.format), all_passed(checks)};
    }
    case Command::Crc: return run_crc(c);
    case Command::Invariants: return run_invariants(c);
    case Command::All: {
      CheckOptions o;
      o.threads = c.threads;
      o.nMax = c.nMax;
      o.order = c.order;
      auto checks = all_checks(o);
      return {render_checks(checks, c.command, c.format), all_passed(checks)};
    }
  }
  return {};
}

}  // namespace

int threads_from_environment() {
  const char* v = std::getenv("CRCVERIFY_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > 4096) throw ConfigError(std::string("CRCVERIFY_THREADS: bad value '") + v + "'");
  return static_cast<int>(n);
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& help) {
  CLI::App app{"Exact verification of the quantum cohomology of an involution quotient and its resolution",
               "crcverify"};
  RunConfig c;
  std::string space = "both", format = "text", report, q1;
  std::vector<int> maxBeta;
  std::string out, importPath, exportPath;
  int threads = -1;

  app.add_option("--space", space, "X, Y or both")->check(CLI::IsMember({"X", "Y", "both"}));
  app.add_option("--max-beta", maxBeta, "curve class bound, d or n,i")->delimiter(',');
  app.add_option("--order", c.order, "series order for the tan identity")->check(CLI::PositiveNumber);
  app.add_option("--n-max", c.nMax, "last degree of the recursion")->check(CLI::PositiveNumber);
  app.add_option("--q1", q1, "specialize q1 in the resolution table");
  app.add_flag("--check-all", c.checkAll, "sweep every WDVV instance");
  app.add_flag("--recursion", c.recursion, "run the resolution recursion");
  app.add_flag("--verify", c.verify, "run the checks of the subcommand");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--report", report, "report format (json)")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "write the report to a file");
  app.add_option("--import", importPath, "invariant table in JSON");
  app.add_option("--export", exportPath, "write the invariant table as JSON");
  app.add_option("--threads", threads, "worker count (overrides CRCVERIFY_THREADS)")->check(CLI::PositiveNumber);

  std::vector<std::pair<CLI::App*, Command>> subs;
  for (auto [name, cmd, desc] : std::vector<std::tuple<std::string, Command, std::string>>{
           {"tables", Command::Tables, "quantum multiplication tables"},
           {"wdvv", Command::Wdvv, "associativity sweep and recursion"},
           {"charclass", Command::Charclass, "Chern class identities"},
           {"crc", Command::Crc, "ring isomorphism, potentials and tan identity"},
           {"invariants", Command::Invariants, "import, export and list invariant tables"},
           {"all", Command::All, "every check"}}) {
    auto* s = app.add_subcommand(name, desc);
    s->fallthrough();
    subs.push_back({s, cmd});
  }
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    help << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  for (const auto& [s, cmd] : subs)
    if (s->parsed()) c.command = cmd;
  c.space = space == "X" ? SpaceChoice::X : space == "Y" ? SpaceChoice::Y : SpaceChoice::Both;
  c.format = (format == "json" || report == "json") ? Format::Json : Format::Text;
  if (!maxBeta.empty()) c.maxBeta = maxBeta;
  if (!q1.empty()) {
    try {
      c.q1 = Rational::parse(q1);
    } catch (const std::exception& e) {
      throw ConfigError("--q1: " + std::string(e.what()));
    }
  }
  if (!out.empty()) c.out = out;
  if (!importPath.empty()) c.importPath = importPath;
  if (!exportPath.empty()) c.exportPath = exportPath;
  c.threads = threads > 0 ? threads : threads_from_environment();
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    auto o = dispatch(config);
    if (config.out)
      write_file(*config.out, o.text);
    else
      out << o.text;
    return o.passed ? 0 : 1;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const OutOfTableRange& e) {
    err << "out of table range: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cli_main(int argc, const char* const* argv) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(argc, argv, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
  if (!config) return 0;
  return run(*config, std::cout, std::cerr);
}

}  // namespace crc
