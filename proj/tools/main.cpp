#include <iostream>
#include <string>
#include <vector>

#include "vitushkin/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vitushkin::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
