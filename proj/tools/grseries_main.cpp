#include <string>
#include <vector>

#include "grseries/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return grseries::run_cli(args);
}
