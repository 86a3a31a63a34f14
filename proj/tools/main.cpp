#include <iostream>

#include "modhowe/cli/cli.hpp"

int main(int argc, char** argv) {
  return modhowe::cli::run(argc, argv, std::cout, std::cerr);
}
