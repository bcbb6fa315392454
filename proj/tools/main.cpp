#include "cli.hpp"

int main(int argc, char** argv) { return gasket::cli::cli_dispatch(argc, argv); }
