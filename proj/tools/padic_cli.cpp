#include <iostream>
#include <string>
#include <vector>

#include "padic/cli.hpp"

int main(int argc, char** argv)
{
    return padic::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
