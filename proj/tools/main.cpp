#include "chebcube/cli.hpp"

int main(int argc, char** argv) { return chebcube::cli_main(argc, argv); }
