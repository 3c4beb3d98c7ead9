#include <iostream>

#include "ramsey/cli.hpp"

int main(int argc, char** argv) { return ramsey::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
