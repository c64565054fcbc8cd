#include "sl2comb/cli.hpp"

int main(int argc, char** argv) { return sl2comb::cli::run(argc, argv, std::cout, std::cerr); }
