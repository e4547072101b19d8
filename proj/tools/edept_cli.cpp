#include "edept/cli/commands.hpp"

int main(int argc, char** argv) { return edept::cli::run(argc, argv); }
