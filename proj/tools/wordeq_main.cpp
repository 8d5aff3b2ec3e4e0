#include <iostream>

#include "wordeq/cli.hpp"

int main(int argc, char** argv) { return wordeq::run_cli(argc, argv, std::cout, std::cerr); }
