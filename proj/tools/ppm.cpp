#include <iostream>

#include "ppm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const ppm::CliResult r = ppm::run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
