// palwidth.cpp -- command-line front end, see cli.hpp for the commands

#include <iostream>

#include "palwidth/cli.hpp"

int main(int argc, char** argv) {
    return palwidth::cli::run(argc, argv, std::cout, std::cerr);
}
