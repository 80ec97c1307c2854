#include <iostream>

#include "qck_cli/commands.hpp"

int main(int argc, char** argv) { return qck::cli::run(argc, argv, std::cout, std::cerr); }
