#include <iostream>

#include "coxdec/cli.hpp"

int main(int argc, char** argv) {
  return coxdec::run_main(argc, argv, std::cout, std::cerr);
}
