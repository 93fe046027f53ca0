#include "og4/cli.hpp"

int main(int argc, char** argv) { return og4::cli_main(argc, argv); }
