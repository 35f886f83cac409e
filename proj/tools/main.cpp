#include <iostream>

#include "adefam/cli.hpp"

int main(int argc, char** argv) { return adefam::cli::run(argc, argv, std::cout, std::cerr); }
