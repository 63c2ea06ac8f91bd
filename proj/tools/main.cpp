#include <iostream>
#include <string>
#include <vector>

#include "jetgeom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jetgeom::cli::run(args, std::cout, std::cerr);
}
