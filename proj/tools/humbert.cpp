#include <iostream>

#include "humbert/cli.hpp"

int main(int argc, char** argv) {
  return humbert::run(std::vector<std::string>(argv + 1, argv + argc), std::cout);
}
