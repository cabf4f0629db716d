#include <iostream>

#include "qauth_cli/cli.hpp"

int main(int argc, char** argv) { return qauth::cli::run(argc, argv, std::cout, std::cerr); }
