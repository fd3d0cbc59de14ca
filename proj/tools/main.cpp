#include "braceblocks/cli.hpp"

int main(int argc, char** argv) { return braceblocks::run_cli(argc, argv); }
