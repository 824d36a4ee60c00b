#include "qlat/cli.hpp"

int main(int argc, char** argv) { return qlat::cli::run_main(argc, argv); }
