#include <iostream>

#include "ftmd/cli.hpp"

int main(int argc, char** argv) {
  return ftmd::cli::run(argc, argv, std::cout, std::cerr);
}
