#include "tightmaps/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tightmaps::cli::run_cli(args);
}
