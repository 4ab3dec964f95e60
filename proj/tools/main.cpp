#include <iostream>
#include <string>
#include <vector>

#include "longray/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return longray::cli::run(args, std::cout, std::cerr);
}
