#include <iostream>

#include "apostol/cli.hpp"

int main(int argc, char** argv) { return apostol::cli::run(argc, argv, std::cout, std::cerr); }
