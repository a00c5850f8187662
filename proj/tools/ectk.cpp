#include "ectk/cli.hpp"

int main(int argc, char** argv) { return ectk::cli::run(argc, argv); }
