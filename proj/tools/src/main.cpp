#include <iostream>

#include "fractel_cli/cli.hpp"

int main(int argc, char** argv) { return fractel::cli::run(argc, argv, std::cout, std::cerr); }
