#include <iostream>

#include "geohit/cli.hpp"

int main(int argc, char** argv) { return geohit::run_cli(argc, argv, std::cout, std::cerr); }
