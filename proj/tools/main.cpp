#include <iostream>

#include "splitmerge/cli.hpp"

int main(int argc, char** argv) { return splitmerge::cli::run_cli(argc, argv, std::cout, std::cerr); }
