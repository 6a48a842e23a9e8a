#include <iostream>

#include "f2j/cli.hpp"

int main(int argc, char** argv) { return f2j::cli::run(argc, argv, std::cout, std::cerr); }
