#include "cli.hpp"

int main(int argc, char** argv) { return purejump::cli::run(argc, argv); }
