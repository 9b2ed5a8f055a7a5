#include <vector>

#include "sabrsmile/cli.hpp"

int main(int argc, char** argv) {
    return sabrsmile::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
