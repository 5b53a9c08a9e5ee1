#include "matcharr/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    int code = 0;
    auto config = matcharr::cli::parse_args(argc, argv, std::cout, std::cerr, code);
    if (!config)
        return code;
    return matcharr::cli::run(*config, std::cout, std::cerr);
}
