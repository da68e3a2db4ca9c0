#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return sdac9::cli::run(argc, argv, std::cout, std::cerr); }
