#include <iostream>

#include "liecone_cli/cli.hpp"

int main(int argc, char** argv) { return liecone::cli::run(argc, argv, std::cout, std::cerr); }
