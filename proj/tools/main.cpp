#include <iostream>

#include "confsched/cli.hpp"

int main(int argc, char** argv) { return confsched::run_cli(argc, argv, std::cout, std::cerr); }
