#include "smoothavg/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return smoothavg::run_cli(args, std::cout, std::cerr);
}
