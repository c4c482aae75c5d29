#include <iostream>
#include <string>
#include <vector>

#include "ildt/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ildt::run_cli(args, std::cout);
}
