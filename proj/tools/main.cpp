#include "yfrieze/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return yfrieze::run(argc, argv, std::cout, std::cerr); }
