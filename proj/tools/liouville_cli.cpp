#include "liouville/cli.hpp"

int main(int argc, char** argv) { return liouville::run(argc, argv); }
