#include <iostream>

#include "thetaq/cli.hpp"

int main(int argc, char** argv) { return thetaq::run_cli(argc, argv, std::cout, std::cerr); }
