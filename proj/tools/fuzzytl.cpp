#include <iostream>

#include "fuzzytl/cli.hpp"

int main(int argc, char** argv) {
  return fuzzytl::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr);
}
