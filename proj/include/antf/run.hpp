#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace antf {

enum class Command { AssPowers, Classify, Verify, OracleCompare, ReesCheck };

Command parse_command(std::string_view name);
std::string_view to_string(Command c);

struct RunConfig {
  Command command = Command::AssPowers;
  std::filesystem::path input_path;
  /// Used instead of reading input_path when set.
  std::optional<std::string> input_text;
  int kmax = 3;
  double budget_seconds = 300.0;
  /// 0 disables the step limit.
  std::uint64_t budget_steps = 0;
  bool json = false;
  unsigned threads = 1;
  /// auto | graph | specialcycle | ass | deg2 | deg3
  std::string which = "auto";
  /// Disconnected graphs: classify components, combine Ass via split_ass.
  bool composite = false;
  /// Adds wall-clock timing to the report (breaks byte-identical reruns).
  bool timing = false;

  void validate() const;
};

/// ANTF_BUDGET_SECONDS when set and positive, else 300.
double default_budget_seconds();

struct Report {
  nlohmann::ordered_json body;
  bool mismatch = false;
  bool budget_exhausted = false;

  /// 0 clean, 1 mismatch, 3 budget exhausted.
  int exit_code() const;
  std::string render(bool as_json) const;
};

/// Throws ParseError, HypothesisViolation or InvalidArgument for bad input.
Report run(const RunConfig& config);

}  // namespace antf
