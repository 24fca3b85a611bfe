#include <iostream>

#include "mstd/cli.hpp"

int main(int argc, char** argv) {
    return mstd::run_cli(argc, argv, std::cout, std::cerr);
}
