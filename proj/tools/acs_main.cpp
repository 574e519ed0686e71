#include <iostream>
#include <string>
#include <vector>

#include "acs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return acs::run_cli(args, std::cout, std::cerr);
}
