#include <iostream>

#include "hypercover/cli.hpp"

int main(int argc, char** argv) {
  return hypercover::run_cli(argc, argv, std::cout, std::cerr);
}
