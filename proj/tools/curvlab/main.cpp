#include <iostream>

#include "curvlab/tools/cli.hpp"

int main(int argc, char** argv) { return curvlab::tools::run(argc, argv, std::cout, std::cerr); }
