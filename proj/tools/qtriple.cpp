#include <iostream>
#include <string>
#include <vector>

#include "qtriple/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qtriple::cli::run_cli(std::move(args), std::cout, std::cerr);
}
