#include <iostream>

#include "leachate/cli.hpp"

int main(int argc, char** argv) { return leachate::cli_main(argc, argv, std::cout, std::cerr); }
