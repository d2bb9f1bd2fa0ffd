#include <iostream>

#include "bondpoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bondpoly::run_cli(args, std::cout, std::cerr);
}
