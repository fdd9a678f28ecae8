#include <iostream>

#include "ekrm/cli.hpp"

int main(int argc, char** argv) { return ekrm::run_cli(argc, argv, std::cout, std::cerr); }
