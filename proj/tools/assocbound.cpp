#include <iostream>

#include "assocbound/cli.hpp"

int main(int argc, char** argv) {
  return assocbound::cli::run(argc, argv, std::cout, std::cerr);
}
