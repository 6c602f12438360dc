#include "hitq/cli.hpp"

int main(int argc, char** argv) { return hitq::run_cli(argc, argv); }
