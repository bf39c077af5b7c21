#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ccr::cli::run_cli(argc, argv, std::cout, std::cerr); }
