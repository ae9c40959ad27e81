#include "staralg/cli.hpp"

int main(int argc, char** argv) { return staralg::run_cli(argc, argv); }
