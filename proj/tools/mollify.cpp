#include <iostream>

#include "mollify/cli.hpp"

int main(int argc, char** argv) { return mollify::cli::main_entry(argc, argv, std::cout, std::cerr); }
