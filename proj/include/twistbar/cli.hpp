#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace twistbar::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kMalformedInput = 2,
  kInfeasible = 3,
  kUnsupportedInput = 4,
};

/// Result of one command. Field order is fixed so identical inputs give
/// byte-identical JSON.
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::string status = "pass";  // pass | fail | error
  std::vector<std::string> lines;  // human-readable rendering

  nlohmann::ordered_json to_json() const;
  std::string human() const;
};

/// Default per-level simplex cap of the feasibility guard.
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Runs the command line `args` (without the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  std::uint64_t seed = 1;
  bool verbose = false;
};

/// The full property suite at desk-scale bounds.
Report selftest(const SelftestOptions& options);

}  // namespace twistbar::cli
