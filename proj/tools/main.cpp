#include "boxph/app.hpp"

int main(int argc, char** argv) { return boxph::run_cli(argc, argv); }
