#pragma once

// Command-line front end: `simulate`, `verify`, `sweep` and `algebra-check`.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.
// Failures print one JSON object on a single line to the error stream.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "trace_io.hpp"
#include "trilevel/coherent_field.hpp"
#include "trilevel/model_builder.hpp"

namespace trilevel::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kIo = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FieldKind { Classical, Number, Coherent };
enum class Method { Auto, Analytic, Oracle };

/// Run settings as given; unset members fall back to the config file and
/// then to defaults.
struct RunOptions {
  std::optional<std::string> model, field, out, format, method, weights;
  std::optional<double> kappa1, kappa2, g1, g2, nbar, mbar;
  std::optional<double> omega1, omega2, delta1, delta2;
  std::optional<int> n, m, initial;
  std::optional<double> tmax;
  std::optional<long long> samples;
};

/// Members set in `over` replace those of `base`.
RunOptions merge(const RunOptions& base, const RunOptions& over);

/// Reads a JSON object whose keys are the flag names without dashes.
/// Throws UsageError for unknown keys or wrongly typed values, IoError when
/// the file cannot be read.
RunOptions load_config_file(const std::filesystem::path& path);

/// Assigns the numeric parameter `name` (a flag name without dashes).
/// Throws UsageError for unknown names or non-integral values of integer
/// parameters.
void set_parameter(RunOptions& options, const std::string& name, double value);

/// Fully specified simulation.
struct RunConfig {
  Configuration model = Configuration::Lambda;
  FieldKind field = FieldKind::Classical;
  double kappa1 = 0.0, kappa2 = 0.0;
  CavityParams cavity;
  int n = 0, m = 0;
  double nbar = 0.0, mbar = 0.0;
  AtomParams atom{1.0, 0.6};
  double delta1 = 0.0, delta2 = 0.0;
  Level initial = Level::One;
  double t_max = 100.0;
  std::size_t samples = 2000;
  std::string output_path;
  TraceFormat format = TraceFormat::Csv;
  Method method = Method::Auto;  // resolved to Analytic or Oracle
  WeightIndexing weights = WeightIndexing::ManifoldLabel;
};

/// Validates options, fills defaults and picks the evaluation method.
/// Throws UsageError.
RunConfig resolve(const RunOptions& options);

TraceData simulate(const RunConfig& config);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trilevel::cli
