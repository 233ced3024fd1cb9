#include <iostream>

#include "arknit/cli.hpp"

int main(int argc, char** argv) {
  return arknit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
