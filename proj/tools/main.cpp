#include "sdiff/cli.hpp"

int main(int argc, char** argv) { return sdiff::cli::run(argc, argv); }
