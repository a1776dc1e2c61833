#include <iostream>
#include <string>
#include <vector>

#include "qll/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qll::run_command(args, std::cout, std::cerr);
}
