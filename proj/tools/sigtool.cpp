#include <iostream>
#include <string>
#include <vector>

#include "sig/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sig::cli::run(args, std::cout, std::cerr);
}
