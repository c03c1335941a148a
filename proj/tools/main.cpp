#include <iostream>

#include "mrispeech/cli/commands.hpp"

int main(int argc, char** argv) { return mrispeech::cli::run(argc, argv, std::cout, std::cerr); }
