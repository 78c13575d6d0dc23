#include "lkwb/cli.hpp"

int main(int argc, char** argv) { return lkwb::cli::main(argc, argv); }
