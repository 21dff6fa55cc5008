#include "gkm/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return gkm::run_cli(argc, argv, std::cout, std::cerr);
}
