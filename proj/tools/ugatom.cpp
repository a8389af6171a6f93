#include <iostream>

#include "ugatom/cli.hpp"

int main(int argc, char** argv) { return ugatom::cli::run(argc, argv, std::cout, std::cerr); }
