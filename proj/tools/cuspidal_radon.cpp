#include "cuspidal/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cuspidal::run_cli(args, std::cout, std::cerr);
}
