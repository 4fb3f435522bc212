#include <iostream>
#include <string>
#include <vector>

#include "modva/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return modva::dispatch(args, std::cout, std::cerr);
}
