#include <iostream>

#include "wmw/cli/app.hpp"

int main(int argc, char** argv) {
    return wmw::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
