#include <iostream>

#include "tropfan/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return tropfan::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
