#include <iostream>

#include "footrank/cli.hpp"

int main(int argc, char** argv) {
  return footrank::run_cli(argc, argv, std::cout, std::cerr);
}
