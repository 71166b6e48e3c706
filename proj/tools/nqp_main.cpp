// Command-line frontend for the nonclassicality-quasiprobability
// pipeline: simulate -> charfunc -> reconstruct / scan-width /
// compare-rect / efficiency-sweep / verify-filter, plus manifest replay.

#include <cstdio>
#include <exception>
#include <string>

#include "nqp_commands.hpp"

int main(int argc, char** argv) {
  try {
    return nqp::cli::run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
