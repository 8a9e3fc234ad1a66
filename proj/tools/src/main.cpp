#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return twoouter::cli::run(argc, argv, std::cout, std::cerr); }
