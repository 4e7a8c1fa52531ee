#pragma once

// Command-line front end. `run` is the testable core; `main_entry` parses argv.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "diskdiam/bounds.hpp"

namespace diskdiam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

struct RunConfig {
  /// eval | diameter | bounds | density | explore | verify-all
  std::string subcommand;
  /// Path, or "-" for standard input.
  std::string input;
  /// Spec text used instead of `input` when nonempty.
  std::string inline_spec;
  /// name=value pairs as given to --tol.
  std::vector<std::string> tol;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  bool timestamp = true;

  std::string r_grid;              // a:b:n
  std::vector<std::string> checks;  // bounds
  std::vector<std::string> z;       // "re,im" or "re"
  std::vector<std::string> w;
  std::vector<std::size_t> n;
  std::string problem;  // explore: phi | 2 | 3
  std::string family;   // explore family kind
  std::string grid;     // explore parameter grid, a:b:n or comma list
  std::size_t count = 8;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
  std::string diagnostics;
};

/// Resolved numeric settings; throws ArgumentError on unknown names or
/// non-positive values.
struct Settings {
  Tolerances tol;
  std::size_t grid_resolution = 64;
  std::size_t w_grid_resolution = 16;
  std::size_t interior_samples = 10000;
};
Settings resolve_settings(const std::vector<std::string>& tol);

RunResult run(const RunConfig& config);

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace diskdiam::cli
