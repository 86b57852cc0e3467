#include <iostream>

#include "baileykit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return baileykit::run_cli(args, std::cout, std::cerr);
}
