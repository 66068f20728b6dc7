#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace linkage::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 2, kNegative = 3 };

struct Command {
  std::string subcommand;
  std::optional<std::string> graph;    // JSON graph file
  std::optional<std::string> lengths;  // inline list, or a K_{3,3} lengths file
  std::optional<std::string> output;
  std::string format = "json";
  std::size_t resolution = 20000;
  int restarts = 1000;
  std::uint64_t seed = 0;
  std::string method;  // empty: sweep for K_{3,3} lengths, sampling for graphs
  std::optional<std::string> stage;
  std::optional<std::string> pin;  // "origin,axis"
  int samples = 500;
  int knots = 32;
  int knot_iterations = 100;
  unsigned workers = 0;
  std::optional<double> merge_gap;
  std::optional<double> theta;
  std::string tuple = "+++";
  bool components = false;
  std::size_t oracle_samples = 0;
};

/// One line listing every option that affects the output.
std::string banner(const Command& c);

/// Machine output goes to `out` (or the --output file), the banner and a
/// human-readable summary to `err`.
int run(const Command& c, std::ostream& out, std::ostream& err);

/// Parses argv (LINKAGE_SEED supplies the default seed) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkage::cli
