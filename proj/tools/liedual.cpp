#include <iostream>

#include "liedual/cli.hpp"

int main(int argc, char** argv) { return liedual::run_cli(argc, argv, std::cout, std::cerr); }
