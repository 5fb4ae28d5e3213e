#include <iostream>
#include <string>
#include <vector>

#include "logderiv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return logderiv::cli::run(args, std::cout, std::cerr);
}
