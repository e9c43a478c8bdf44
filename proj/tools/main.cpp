#include <iostream>
#include <string>
#include <vector>

#include "wigqpi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wigqpi::cli::run(args, std::cout, std::cerr);
}
