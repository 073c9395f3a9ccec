#include <iostream>

#include "fqpoints/cli.hpp"

int main(int argc, char** argv) { return fqpoints::cli::run(argc, argv, std::cout, std::cerr); }
