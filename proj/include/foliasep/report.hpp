#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "foliasep/errors.hpp"
#include "foliasep/parser.hpp"
#include "foliasep/polar.hpp"

namespace foliasep {

enum class Command { Invariants, Reduce, Separatrices, Balanced, PolarCheck, Certify, All };

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);

struct AnalyzeOptions {
  int seed = 0;
  std::optional<int> truncation;          // guaranteed separatrix order; default 2 mu + 4
  std::optional<ProjectivePair> polar_hint;
  int branch_count = 5;
};

namespace exit_code {
constexpr int kOk = 0;
constexpr int kInput = 1;
constexpr int kIdentity = 2;
constexpr int kResource = 3;
}  // namespace exit_code

int exit_code_for(ErrorCode code);

struct Analysis {
  nlohmann::ordered_json report;
  std::string dot;
  int exit_code = exit_code::kOk;
};

Analysis analyze(const InputSpec& spec, Command cmd, const AnalyzeOptions& options = {});
// Parses first; syntax and isolation failures become an error report with exit code 1.
Analysis analyze_text(const std::string& text, Command cmd, const AnalyzeOptions& options = {});

}  // namespace foliasep
