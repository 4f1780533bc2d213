#include <iostream>
#include <string>
#include <vector>

#include "stallings/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stallings::cli::run(args, std::cout, std::cerr);
}
