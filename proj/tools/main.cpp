#include <iostream>

#include "hilb/cli.hpp"

int main(int argc, char** argv) {
  return hilb::cli::run(argc, argv, std::cout, std::cerr);
}
