#include <iostream>

#include "rexosc/cli/run.hpp"

int main(int argc, char** argv) { return rexosc::cli::run(argc, argv, std::cout, std::cerr); }
