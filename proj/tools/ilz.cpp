#include "ilz/cli.hpp"

int main(int argc, char** argv) { return ilz::run_cli(argc, argv); }
