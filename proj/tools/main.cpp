#include "hyparr_cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hyparr::cli::run(argc, argv, std::cout, std::cerr); }
