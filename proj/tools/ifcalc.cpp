#include <iostream>
#include <string>
#include <vector>

#include "ifc/cli.hpp"

int main(int argc, char** argv) {
  return ifc::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
