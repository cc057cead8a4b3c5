#include <iostream>

#include "bier/cli.hpp"

int main(int argc, char** argv) { return bier::cli::run(argc, argv, std::cout); }
