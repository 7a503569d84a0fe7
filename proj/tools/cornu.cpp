#include <iostream>

#include "cornu/cli.hpp"

int main(int argc, char** argv) {
  return cornu::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
