#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "duffing/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return duffing::cli::main_entry(args, std::cout, std::cerr, std::getenv("DUFFING_LAB_THREADS"));
}
