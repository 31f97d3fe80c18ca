#include <iostream>

#include "gkm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = gkm::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exitCode;
}
