#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vaxalloc/calibration.hpp"
#include "vaxalloc/sweep.hpp"

namespace vaxalloc::cli {

enum class Command { Solve, Frontier, Sweep, Summarize, Audit, Calibrate };
enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Environment variable that overrides the bundled dataset path.
inline constexpr const char* kDatasetEnv = "VAXALLOC_DATASET";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Solve;
  std::string input_path;  // empty: environment override, then bundled dataset
  std::vector<std::string> countries;  // empty: every country in the dataset
  double gamma = kDefaultGamma;
  std::vector<double> v_over_l = {0.2, 0.4, 0.6};
  std::vector<double> beta_white;
  std::vector<double> beta_blue;
  double threshold = 0.66;
  GridSpec grid;
  std::size_t oracle_points = 100001;
  Execution execution = Execution::Parallel;
  Format output_format = Format::Csv;
  std::string output_path;  // empty: standard output
  std::string output_dir;   // sweep only: one file per (country, V/L)
};

/// Parses the command line. Returns false when help was printed and nothing
/// should run. Throws UsageError on bad flags or out-of-range values.
bool parse_args(int argc, const char* const* argv, RunConfig& config, std::ostream& out);

/// Checks command-specific requirements and numeric ranges.
void validate(const RunConfig& config);

std::string dataset_path(const RunConfig& config);

/// Executes one command; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vaxalloc::cli
