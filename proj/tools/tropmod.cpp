#include "tropmod/cli.hpp"

int main(int argc, char** argv) { return tropmod::cli::run(argc, argv); }
