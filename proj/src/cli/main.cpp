#include "cli.hpp"

int main(int argc, char** argv) { return gkmn::cli::run(argc, argv); }
