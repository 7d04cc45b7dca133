#include <iostream>
#include <string>
#include <vector>

#include "cli/run.hpp"

int main(int argc, char** argv) {
    return orlicz::cli::main_entry(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
