#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vitushkin/cli/document.hpp"

namespace vitushkin::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

struct CommandResult {
  std::string csv;
  bool violation = false;
};

CommandResult cmd_bound(const ProblemDocument& doc);
CommandResult cmd_polytope(const ProblemDocument& doc);
CommandResult cmd_verify(const ProblemDocument& doc, std::size_t threads);
CommandResult cmd_gabrielov(const ProblemDocument& doc, std::size_t threads);

/// Full tool entry point. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vitushkin::cli
