#include <iostream>

#include "twgr/cli.hpp"

int main(int argc, char** argv) { return twgr::cli::run(argc, argv, std::cout, std::cerr); }
