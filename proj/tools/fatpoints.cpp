#include "fatpoints/cli/cli.hpp"

int main(int argc, char** argv) { return fatpoints::cli::main(argc, argv); }
