#include <iostream>

#include "dmtool/commands.hpp"

int main(int argc, char** argv) {
  return dmtool::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
