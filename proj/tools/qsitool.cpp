#include <iostream>

#include "qsi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qsi::run(args, std::cout, std::cerr);
}
