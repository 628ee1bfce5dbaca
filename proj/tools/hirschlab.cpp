#include <iostream>
#include <string>
#include <vector>

#include "hirschlab/io/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hirschlab::io::run_command(args, std::cout, std::cerr);
}
