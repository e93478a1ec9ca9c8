#include <iostream>
#include <string>
#include <vector>

#include "implcount/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return implcount::cli::run(args, std::cout, std::cerr);
}
