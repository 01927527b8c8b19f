#include <iostream>
#include <string>
#include <vector>

#include "cek/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cek::cli::run(args, std::cout, std::cerr);
}
