#include <iostream>
#include <string>
#include <vector>

#include "spp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spp::cli::run(args, std::cout, std::cerr);
}
