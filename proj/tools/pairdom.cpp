#include <iostream>

#include "pairdom/cli.hpp"

int main(int argc, char **argv) {
  return pairdom::cli::run(argc, argv, std::cout, std::cerr);
}
