#include "pcetd/cli.hpp"

int main(int argc, char** argv) { return pcetd::cli_main(argc, argv); }
