#include "thresh2d/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return thresh2d::cli::run(argc, argv, std::cout, std::cerr);
}
