#include "assocfold/cli.hpp"

int main(int argc, char** argv) { return assocfold::cli::run(argc, argv); }
