#include <iostream>

#include "sdarcy/cli.hpp"

int main(int argc, char** argv) { return sdarcy::run_cli(argc, argv, std::cout, std::cerr); }
