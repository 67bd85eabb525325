#include <iostream>
#include <string>
#include <vector>

#include "ringline/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ringline::run(args, std::cout, std::cerr);
}
