#include "detvar/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  try {
    return detvar::run(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "detvar: " << e.what() << "\n";
    return 1;
  }
}
