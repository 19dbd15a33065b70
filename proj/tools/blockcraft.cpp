#include <iostream>

#include "blockcraft/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return blockcraft::run_command(args, std::cout, std::cerr);
}
