#include "freeknot/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return freeknot::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
