#include <iostream>

#include "nhodge_cli/app.hpp"

int main(int argc, char** argv) {
  return nhodge::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
