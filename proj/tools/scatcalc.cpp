#include <iostream>
#include <string>
#include <vector>

#include "scat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scat::run(args, std::cout, std::cerr);
}
