#include <iostream>
#include <string>
#include <vector>

#include "mjump_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return milnor_jump::cli::run(std::move(args), std::cout, std::cerr);
}
