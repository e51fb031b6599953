#include <cstdlib>
#include <iostream>
#include <vector>

#include "tempsep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    int code = tempsep::run_cli(args, std::cout, std::cerr);
    std::cout.flush();
    std::cerr.flush();
    // A timed-out solver thread may still be running detached.
    if (code == 3) std::_Exit(3);
    return code;
}
