#include "bspoly/parallel.h"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace bspoly {

int ThreadLimit() {
  if (const char* env = std::getenv("BSPOLY_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace bspoly
