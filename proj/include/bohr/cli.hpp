#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bohr {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

/// Settings shared by all subcommands. Precedence: flags, then the
/// --config file, then BOHR_LAB_WORKERS (workers only), then defaults.
struct CliConfig {
  std::uint64_t seed = 42;
  std::size_t workers = 1;
  std::size_t order = 64;           // K
  double sample_radius = 0.995;     // rho_w
  std::size_t n_samples = 8192;
  double tol_verify = 1e-9;
  double tol_root = 1e-10;
};

/// Applies key=value lines (keys: seed, workers, K, rho_w, n_samples,
/// tol_verify, tol_root; '#' starts a comment). Throws Error(Usage) on
/// unknown keys or malformed values.
void apply_config_text(CliConfig& config, const std::string& text);

/// Runs the tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bohr
