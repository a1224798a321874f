#include <iostream>

#include "regspec/cli/app.hpp"

int main(int argc, char** argv) { return regspec::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
