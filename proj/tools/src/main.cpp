#include <iostream>
#include <string>
#include <vector>

#include "hllab/cli.hpp"

int main(int argc, char** argv) {
  return hllab::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
