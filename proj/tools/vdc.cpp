#include "vdc/cli.hpp"

int main(int argc, char** argv) { return vdc::cli::main(argc, argv); }
