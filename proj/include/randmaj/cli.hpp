#pragma once

// Command-line front end: argument parsing, experiment dispatch, CSV and
// JSON manifest emission.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace randmaj::cli {

enum class Experiment { Fig2, Fig3, Fig4, Persistence, Sample };

std::string experiment_name(Experiment e);

struct RunConfig {
  Experiment experiment = Experiment::Fig2;
  std::vector<std::size_t> n_list;
  std::uint64_t samples = 1;
  std::size_t k_max = 1;
  double alpha = 1.0;
  std::uint64_t master_seed = 1;
  std::uint64_t chunk_size = 10000;
  std::size_t threads = 1;
  std::string output_dir = ".";
  /// Smallest n entering the power-law fit of fig2.
  std::size_t fit_min_n = 32;
  /// Early-stop rule of the limit functional in fig4.
  bool early_stop = false;
};

/// Bad command line; carries the process exit code (2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  int exit_code() const { return 2; }
};

/// `args` excludes the program name. Returns std::nullopt when help was
/// requested (the help text is written to `help_out`).
std::optional<RunConfig> parse_args(const std::vector<std::string>& args,
                                    std::ostream& help_out);

/// Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs the configured experiment, writes `<experiment>.csv` and
/// `manifest.json` into output_dir. Returns 0, 1 on I/O failure, 2 on an
/// invalid configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point used by the executable.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace randmaj::cli
