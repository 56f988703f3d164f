#include <iostream>

#include "sfk/cli.hpp"

int main(int argc, char** argv) {
  return sfk::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr);
}
