#include <iostream>

#include "qcircle/cli.hpp"

int main(int argc, char** argv) {
  return qcircle::cli::run(argc, argv, std::cout, std::cerr);
}
