#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace dress {

/// Outcome of one CLI invocation. Exactly one of result / error is set.
/// exit_code: 0 for a positive answer, 1 for a mathematically negative one
/// (not a member, not principal, no applicable factorization), 2 for errors.
struct Report {
  bool ok = false;
  std::string command;
  nlohmann::json result;  // null when error is set
  std::optional<std::string> error;
  int exit_code = 2;
  bool json_output = false;
};

/// args excludes the program name: {subcommand, operands..., flags...}.
Report execute(const std::vector<std::string>& args);

/// {"ok", "command", "result", "error"}.
nlohmann::json to_json(const Report& r);
/// JSON text when --json was given, otherwise "key: value" lines.
std::string render(const Report& r);

std::string usage();

}  // namespace dress
