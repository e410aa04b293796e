#include "gws/cli.hpp"

int main(int argc, char** argv) { return gws::run_cli(argc, argv); }
