#include <cliquepf/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return cliquepf::cli::main(argc, argv, std::cout, std::cerr); }
