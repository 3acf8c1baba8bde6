#include "urlevi_cli/report.hpp"

#include <iostream>

int main(int argc, char** argv) { return urlevi::cli::run(argc, argv, std::cout, std::cerr); }
