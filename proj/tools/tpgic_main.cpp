#include <iostream>
#include <string>
#include <vector>

#include "tpgic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tpgic::run_command(args, std::cout, std::cerr);
}
