#include <iostream>
#include <string>
#include <vector>

#include "phinewton/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return phinewton::run_cli(args, std::cout, std::cerr);
}
