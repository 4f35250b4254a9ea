#include <iostream>

#include "meridian/cli.hpp"

int main(int argc, char** argv) { return meridian::run_cli(argc, argv, std::cout, std::cerr); }
