#include <iostream>

#include "arccurve/cli.hpp"

int main(int argc, char** argv) {
    return arccurve::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
