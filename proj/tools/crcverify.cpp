#include "crc/cli.hpp"

int main(int argc, char** argv) { return crc::cli_main(argc, argv); }
