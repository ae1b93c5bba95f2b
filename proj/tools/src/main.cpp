#include <iostream>
#include <string>
#include <vector>

#include "sympent_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sympent::run_cli(args, std::cout, std::cerr);
}
