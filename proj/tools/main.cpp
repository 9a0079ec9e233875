#include "iotscompat/cli.hpp"

int main(int argc, char** argv) { return iotscompat::cli_main(argc, argv); }
