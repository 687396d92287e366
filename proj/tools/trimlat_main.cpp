#include <iostream>
#include <string>
#include <vector>

#include "trimlat/cli_run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trimlat::cli::run_command(args, std::cout, std::cerr);
}
