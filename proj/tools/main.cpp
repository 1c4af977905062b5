#include "grest/cli_app.hpp"

int main(int argc, char** argv) { return grest::cli::run(argc, argv); }
