#include <iostream>

#include "tutte/cli.hpp"

int main(int argc, char** argv) { return tutte::run_cli(argc, argv, std::cout, std::cerr); }
