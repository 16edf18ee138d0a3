#include "isoconst/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return isoconst::cli::run(argc, argv, std::cout, std::cerr); }
