#include <iostream>
#include <string>
#include <vector>

#include "sfs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sfs::run_cli(args, std::cout, std::cerr);
}
