#include <iostream>

#include "delcode/cli.hpp"

int main(int argc, char** argv) {
  return delcode::cli_main(argc, argv, std::cin, std::cout, std::cerr);
}
