#include <iostream>

#include "iso3/cli.hpp"

int main(int argc, char** argv) { return iso3::run_cli(argc, argv, std::cout, std::cerr); }
