#include "cyarith/cli.hpp"

int main(int argc, char** argv) { return cyarith::cli::run(argc, argv); }
