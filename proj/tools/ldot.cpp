#include <iostream>

#include "ldot/cli.hpp"

int main(int argc, char** argv) { return ldot::cli::run(argc, argv, std::cout, std::cerr); }
