#include <iostream>

#include "hnsf/cli.hpp"

int main(int argc, char** argv) { return hnsf::run_cli(argc, argv, std::cout, std::cerr); }
