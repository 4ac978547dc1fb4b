#include <iostream>

#include "groth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return groth::cli::run(args, std::cout, std::cerr);
}
