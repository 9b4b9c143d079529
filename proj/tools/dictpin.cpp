#include "dictpin/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return dictpin::cli::run(argc, argv, std::cout, std::cerr);
}
