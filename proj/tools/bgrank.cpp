#include <iostream>

#include "bgrank/cli.hpp"

int main(int argc, char** argv) { return bgrank::cli::run(argc, argv, std::cout, std::cerr); }
