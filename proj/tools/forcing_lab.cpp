#include <iostream>

#include "forcing/cli.hpp"

int main(int argc, char** argv) { return forcing::cli::main(argc, argv, std::cout, std::cerr); }
