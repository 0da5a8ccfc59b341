#include <iostream>
#include <string>
#include <vector>

#include <sdpdeg/cli.hpp>

int main(int argc, char **argv)
{
    return sdpdeg::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
