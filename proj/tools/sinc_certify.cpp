#include <iostream>

#include "sinc/cli/commands.hpp"

int main(int argc, char** argv) { return sinc::cli::run(argc, argv, std::cout, std::cerr); }
