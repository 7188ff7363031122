#include <iostream>

#include "hypertheta/cli.hpp"

int main(int argc, char** argv) { return hypertheta::cli::run(argc, argv, std::cout, std::cerr); }
