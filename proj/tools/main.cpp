#include <iostream>

#include "intgeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return intgeo::run_cli(args, std::cout, std::cerr);
}
