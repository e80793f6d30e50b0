#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crc/gw_tables.hpp"

namespace crc {

struct CheckResult {
  std::string name;
  std::string anchor;  // what the check reproduces
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  int threads = 0;  // 0: OpenMP default
  int nMax = 20;
  int order = 15;
  CurveClass yBound = CurveClass::y(6, 3);
  CurveClass xBound = CurveClass::x(4);
};

// Named checks grouped by subcommand; each runs to completion and never throws for a
// failed comparison. Configuration problems (ConfigError, OutOfTableRange) propagate.
std::vector<CheckResult> ring_checks(Space space);
std::vector<CheckResult> wdvv_checks(Space space, const InvariantTable& table, const CurveClass& bound, int threads);
std::vector<CheckResult> recursion_checks(int nMax);
std::vector<CheckResult> charclass_checks();
std::vector<CheckResult> crc_checks(int order);
std::vector<CheckResult> all_checks(const CheckOptions& options);

enum class Command { Tables, Wdvv, Charclass, Crc, Invariants, All };
enum class SpaceChoice { X, Y, Both };
enum class Format { Text, Json };

struct RunConfig {
  Command command = Command::All;
  SpaceChoice space = SpaceChoice::Both;
  std::optional<std::vector<int>> maxBeta;
  int order = 15;
  int nMax = 20;
  std::optional<Rational> q1;
  bool checkAll = false;
  bool recursion = false;
  bool verify = false;
  Format format = Format::Text;
  std::optional<std::string> out;
  std::optional<std::string> importPath;
  std::optional<std::string> exportPath;
  int threads = 0;
};

// Parses argv; throws ConfigError on invalid input, returns nullopt after --help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& help);

// Exit code: 0 when every requested check passes, 1 on a failed check, 2 on a
// configuration error (reported on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv);

// Worker count from CRCVERIFY_THREADS (0 when unset); ConfigError when malformed.
int threads_from_environment();

}  // namespace crc
