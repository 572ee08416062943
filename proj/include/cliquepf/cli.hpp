#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cliquepf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kParameterError = 3,
  kCapExceeded = 4,
  kDecideRefused = 5,
};

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::size_t m = 0;
  std::optional<std::string> gamma;
  std::string regime = "standard";
  std::optional<std::size_t> order;
  std::optional<double> target_eps;
  std::string mode = "exact";
  std::optional<double> sigma;
  std::optional<double> eps;
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::optional<std::size_t> n;
  std::optional<double> radius;
  std::vector<std::size_t> anchor;
  std::size_t cap = 20;
  int workers = 0;
  std::string format = "json";
};

/// Runs one subcommand. The report goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to run().
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cliquepf::cli
