#include <iostream>

#include "cli/dispatch.hpp"

int main(int argc, char** argv) {
    return bhseq::cli::run_cli(argc, argv, std::cout, std::cerr);
}
