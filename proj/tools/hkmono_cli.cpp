#include "hkmono/cli.hpp"

int main(int argc, char** argv) { return hkmono::cli::run_cli(argc, argv, std::cout, std::cerr); }
