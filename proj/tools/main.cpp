#include <iostream>

#include "equigrass/cli.hpp"

int main(int argc, char** argv)
{
    return equigrass::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
