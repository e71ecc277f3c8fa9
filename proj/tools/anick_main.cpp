#include <iostream>

#include "anick/cli.hpp"

int main(int argc, char** argv) { return anick::run_cli(argc, argv, std::cout, std::cerr); }
