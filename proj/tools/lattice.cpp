#include <iostream>

#include "lattice/cli.hpp"

int main(int argc, char** argv) { return lattice::cli::run(argc, argv, std::cout, std::cerr); }
