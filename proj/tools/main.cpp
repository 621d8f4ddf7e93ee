#include "pgg/cli.hpp"

int main(int argc, char** argv) { return pgg::cli::run(argc, argv); }
