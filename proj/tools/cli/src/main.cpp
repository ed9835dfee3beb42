#include <cstdlib>
#include <iostream>

#include "cleanring_cli/cli.hpp"

int main(int argc, char** argv) {
  return cleanring::cli::run_cli(argc, argv, std::cout, std::cerr, std::getenv("CLEAN_RING_CAP"));
}
