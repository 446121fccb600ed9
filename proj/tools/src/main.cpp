#include "bnmm_cli/cli.hpp"

#include <iostream>

int main( int argc, char** argv )
{
    return bnmm::cli::run_cli( { argv, argv + argc }, std::cout, std::cerr );
}
