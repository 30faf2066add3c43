#include <iostream>

#include "lvl2/cli.hpp"

int main(int argc, char** argv) { return lvl2::run_cli(argc, argv, std::cout, std::cerr); }
