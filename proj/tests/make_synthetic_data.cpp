// Regenerates the bundled synthetic task battery:
//   make-synthetic-data data/synthetic

#include <cstdio>
#include <exception>

#include "synthetic.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s OUT_DIR\n", argv[0]);
    return 2;
  }
  try {
    bigram_wsd::testing::write_battery(argv[1], bigram_wsd::testing::synthetic_battery());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
