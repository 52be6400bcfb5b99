#include <iostream>

#include "ffgamma/app.hpp"

int main(int argc, char** argv) { return ffgamma::run_cli(argc, argv, std::cout, std::cerr); }
