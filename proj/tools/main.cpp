#include "harmlab/cli.hpp"

int main(int argc, char** argv) { return harmlab::cli::run(argc, argv); }
