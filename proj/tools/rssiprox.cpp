#include "rssiprox/cli/commands.hpp"

int main(int argc, char** argv) { return rssiprox::cli::run(argc, argv); }
