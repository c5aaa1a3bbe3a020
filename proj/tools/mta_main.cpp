#include <iostream>
#include <string>
#include <vector>

#include "mta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mta::cli::run(args, std::cout, std::cerr);
}
