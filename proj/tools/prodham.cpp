#include <iostream>

#include "prodham/cli.hpp"

int main(int argc, char** argv) {
    return prodham::run_cli({argv, argv + argc}, std::cout, std::cerr);
}
