#pragma once

#include <string>
#include <vector>

#include "orr/io.hpp"

namespace orr::cli {

struct CommandResult {
  bool ok = true;
  int exit_code = 0;
  io::json payload = io::json::object();
  std::string human_summary;
  /// --text or --ascii: print the summary instead of the JSON payload.
  bool text = false;

  /// What the binary writes to stdout.
  std::string render() const;
};

/// Runs one command. `args` excludes the program name. Exit code 0 on
/// success, 1 on a domain error or a failing oracle suite, 2 on bad usage.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace orr::cli
