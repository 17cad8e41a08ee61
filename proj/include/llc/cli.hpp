#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace llc::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2 };

struct Hooks {
  /// Runs the acceptance sweep for --grid; returns an exit code.
  std::function<int(std::ostream& out, bool json)> grid;
};

/// Runs one command line (args exclude the program name). Reports go to out,
/// text-mode diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace llc::cli
