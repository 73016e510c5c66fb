#include <iostream>

#include "braidskein/cli.hpp"

int main(int argc, char** argv) { return braidskein::run_cli(argc, argv, std::cout, std::cerr); }
