#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mollify/mollifier.hpp"

namespace mollify::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitAccuracy = 4;

inline const std::vector<std::string> kCommands{"proportion", "optimize", "scan",   "moments", "shifted",
                                                "empirical",  "census",   "kernels", "oracles"};

/// Everything a run depends on. Rationals stay strings ("num/den" or exact
/// decimals) so a report can be replayed exactly.
struct RunConfig {
  std::string command;
  std::string preset;  // "", "paper" or "is-baseline"
  std::string theta1, theta2;
  std::optional<std::vector<std::string>> P, Q;  // coefficients of x^1, x^2, ...
  std::string P_const = "0", Q_const = "0";
  std::vector<std::int64_t> q;
  std::string format;  // json, csv or text; empty picks the command default
  std::string out;
  int dp = 2, dq = 1;
  int max_dp = 4, max_dq = 3;
  std::vector<double> alpha, beta;
  std::vector<double> x;      // kernel arguments
  std::vector<double> log_y;  // divisor-sum oracle lengths
  int nodes = 64, nodes_high = 32;
  bool check_fd = false;
  double threshold = 1e-8;
  std::uint64_t seed = 1;

  bool operator==(const RunConfig&) const = default;
};

nlohmann::ordered_json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

/// Resolves presets and overrides into a spec; throws ValidationError with
/// every violation. Hypothesis-range notes go to warnings.
MollifierSpec validate_spec(const RunConfig& config, std::vector<std::string>& warnings);

nlohmann::ordered_json spec_to_json(const MollifierSpec& spec);

struct Report {
  nlohmann::ordered_json json;
  std::string csv;
};

/// Runs the command; errors propagate as the library's exception types.
Report run(const RunConfig& config);

/// Renders in the requested format (json, csv or text).
std::string render(const Report& report, const std::string& format);

/// Command default when config.format is empty.
std::string effective_format(const RunConfig& config);

/// Runs, writes the report (to config.out or out) and maps exceptions to
/// exit codes, reporting them on err.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: parsing, dispatch and exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mollify::cli
