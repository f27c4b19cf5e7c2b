#include <iostream>
#include <string>
#include <vector>

#include "barycoords/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return barycoords::cli::run(args, std::cout, std::cerr);
}
