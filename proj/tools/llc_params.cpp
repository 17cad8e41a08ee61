#include "acceptance/criteria.hpp"
#include "llc/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  llc::cli::Hooks hooks;
  hooks.grid = [](std::ostream& out, bool json) { return llc::acceptance::run_grid(out, json); };
  return llc::cli::run(args, std::cout, std::cerr, hooks);
}
