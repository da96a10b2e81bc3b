#include <iostream>

#include "vaxalloc/cli.hpp"

int main(int argc, char** argv) {
  return vaxalloc::cli::main(argc, argv, std::cout, std::cerr);
}
