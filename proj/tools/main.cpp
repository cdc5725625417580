#include <vector>

#include "sombor/cli.hpp"

int main(int argc, char** argv) {
    return sombor::run_command(std::vector<std::string>(argv + 1, argv + argc));
}
