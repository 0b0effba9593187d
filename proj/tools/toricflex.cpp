#include <iostream>

#include "toricflex/cli.hpp"

int main(int argc, char** argv) {
  return toricflex::cli::main(argc, argv, std::cin, std::cout, std::cerr);
}
