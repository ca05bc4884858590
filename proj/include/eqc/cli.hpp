#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace eqc {

enum class Command { Hilbert, Model, Verify };
enum class Format { Line, Text, Json };

struct RunConfig {
  Command command = Command::Hilbert;
  std::optional<std::string> case_spec;
  std::optional<std::string> file;
  std::optional<std::string> group;
  std::optional<int> max_degree;
  Format format = Format::Line;
  bool representatives = false;
  bool all_small = false;
  std::optional<std::string> out;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;

// Degree used for --file inputs when --max-degree is absent.
inline constexpr int kDefaultFileDegree = 12;

// Parses argv (argv[0] is the program name) and runs the command. Results go
// to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Runs an already parsed configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace eqc
