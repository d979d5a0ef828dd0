#include "commands.hpp"

int main(int argc, char** argv) { return fbc::cli::run(argc, argv); }
