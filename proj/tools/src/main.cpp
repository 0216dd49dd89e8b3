#include <iostream>

#include "qutrit_cli/commands.hpp"

int main(int argc, char** argv) { return qutrit::cli::run(argc, argv, std::cout, std::cerr); }
