#include <iostream>
#include <vector>

#include "braid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braid::cli::run(args, std::cout, std::cerr);
}
