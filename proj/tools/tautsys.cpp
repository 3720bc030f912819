#include "tautsys/cli.hpp"

int main(int argc, char** argv) { return tautsys::run(argc, argv); }
