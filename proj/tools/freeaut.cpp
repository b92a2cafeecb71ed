#include <iostream>

#include "freeaut/cli.hpp"

int main(int argc, char** argv) { return freeaut::cli::run_cli(argc, argv, std::cout, std::cerr); }
