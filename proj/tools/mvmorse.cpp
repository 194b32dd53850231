#include <iostream>

#include "mvmorse/cli.hpp"

int main(int argc, char** argv) { return mvmorse::run_cli(argc, argv, std::cout, std::cerr); }
