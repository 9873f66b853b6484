#include <iostream>

#include "intsep/cli.hpp"

int main(int argc, char** argv) {
    return intsep::run_cli(argc, argv, std::cout, std::cerr);
}
