#include <iostream>

#include "dhloc/cli.hpp"

int main(int argc, char** argv) { return dhloc::cli::run(argc, argv, std::cout, std::cerr); }
