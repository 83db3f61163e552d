#include <iostream>

#include "ehvi/workbench/cli.hpp"

int main(int argc, char** argv) {
  return ehvi::workbench::run_cli(argc, argv, std::cout, std::cerr);
}
