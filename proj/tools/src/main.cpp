#include <iostream>

#include "diskdiam/cli.hpp"

int main(int argc, char** argv) { return diskdiam::cli::main_entry(argc, argv, std::cout, std::cerr); }
