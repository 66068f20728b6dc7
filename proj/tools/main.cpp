#include <iostream>

#include "linkage/cli.hpp"

int main(int argc, char** argv) { return linkage::cli::main_entry(argc, argv, std::cout, std::cerr); }
