#include "latval/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return latval::run_cli(argc, argv, std::cout, std::cerr); }
