#include "discut/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return discut::run_cli(argc, argv, std::cout, std::cerr); }
