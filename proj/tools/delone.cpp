#include "delone/cli.hpp"

int main(int argc, char** argv) { return delone::cli::run(argc, argv); }
