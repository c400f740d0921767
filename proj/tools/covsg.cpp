#include <iostream>

#include <covsg/cli.hpp>

int main(int argc, char** argv) {
    return covsg::cli_main(argc, argv, std::cout, std::cerr);
}
