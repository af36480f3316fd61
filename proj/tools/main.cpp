#include <iostream>

#include "chebcurve/cli.hpp"

int main(int argc, char** argv) { return chebcurve::cli::dispatch(argc, argv, std::cout, std::cerr); }
