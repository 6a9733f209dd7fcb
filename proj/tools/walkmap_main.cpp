#include <iostream>

#include "walkmap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return walkmap::cli::run(args, std::cout, std::cerr);
}
