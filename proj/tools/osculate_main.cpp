#include <iostream>

#include "osculate/cli.hpp"

int main(int argc, char** argv) { return osculate::run_cli(argc, argv, std::cout, std::cerr); }
