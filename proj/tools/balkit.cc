#include <iostream>
#include <string>
#include <vector>

#include "balkit/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return balkit::cli::run(args, std::cout, std::cerr);
}
