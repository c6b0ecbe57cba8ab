#include <iostream>

#include "nadyn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  nadyn::CliResult r = nadyn::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
