#include <iostream>

#include "akzeta_cli/cli.hpp"

int main(int argc, char** argv) { return akzeta::cli::run(argc, argv, std::cout, std::cerr); }
