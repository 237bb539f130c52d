#include <iostream>

#include "rkc/cli.hpp"

int main(int argc, char** argv) { return rkc::cli::run(argc, argv, std::cout, std::cerr); }
