#include <iostream>

#include "polyrad/cli.hpp"

int main(int argc, char **argv) {
  return polyrad::run_cli(argc, argv, std::cout, std::cerr);
}
