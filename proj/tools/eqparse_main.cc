#include <iostream>
#include <string>
#include <vector>

#include "eqparse/cli/commands.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eqparse::cli::run(args, std::cin, std::cout, std::cerr);
}
