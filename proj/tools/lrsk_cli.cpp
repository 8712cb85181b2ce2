#include "lrsk/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    return lrsk::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
