#include <iostream>

#include "sigmaconic_cli/cli.hpp"

int main(int argc, char** argv) { return sigmaconic::cli::run(argc, argv, std::cout, std::cerr); }
