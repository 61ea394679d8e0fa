#include <iostream>

#include "orthomono/cli.hpp"

int main(int argc, char** argv) { return orthomono::cli::run(argc, argv, std::cout, std::cerr); }
