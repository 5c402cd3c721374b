#include <iostream>

#include "hankel_cli/cli.hpp"

int main(int argc, char** argv) { return hankel_cli::run_cli(argc, argv, std::cout, std::cerr); }
