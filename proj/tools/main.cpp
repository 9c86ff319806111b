#include "tourney/cli.hpp"

int main(int argc, char** argv) { return tourney::cli::run_main(argc, argv); }
