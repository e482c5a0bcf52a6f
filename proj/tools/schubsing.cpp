#include <iostream>

#include "schubsing/cli.hpp"

int main(int argc, char** argv) { return schubsing::cli::run(argc, argv, std::cout, std::cerr); }
