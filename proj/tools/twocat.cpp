#include <iostream>

#include "twocat/cli.hpp"

int main(int argc, char** argv) { return twocat::cli::run(argc, argv, std::cout, std::cerr); }
