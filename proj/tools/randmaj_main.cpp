#include <iostream>

#include "randmaj/cli.hpp"

int main(int argc, char** argv) {
  return randmaj::cli::main_entry(argc, argv, std::cout, std::cerr);
}
