#include "hyperoval/cli.hpp"

int main(int argc, char** argv) { return hyperoval::cli::run(argc, argv); }
