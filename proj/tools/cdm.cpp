#include <string>
#include <vector>

#include "cdm/cli.hpp"

int main(int argc, char** argv) {
    return cdm::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
