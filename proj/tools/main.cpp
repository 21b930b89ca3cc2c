#include "schlicht/cli.hpp"

int main(int argc, char** argv) { return schlicht::cli::run(argc, argv); }
