// CLI entry point; subcommands are assembled in cli_impl.hpp.
#include "cli_impl.hpp"

int main(int argc, char** argv) { return puro::cli::run(argc, argv); }
