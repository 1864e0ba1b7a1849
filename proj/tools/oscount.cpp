#include <iostream>

#include "oscount/cli.hpp"

int main(int argc, char** argv)
{
    return oscount::cli::run(argc, argv, std::cout, std::cerr);
}
