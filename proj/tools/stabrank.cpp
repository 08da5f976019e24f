#include <iostream>

#include "stabrank/cli.hpp"

int main(int argc, char** argv) { return stabrank::cli::run(argc, argv, std::cout, std::cerr); }
