#include "rayclass/parallel.hpp"

#include <cstdlib>
#include <string>

#include <mpfr.h>

namespace rayclass {

int resolve_threads(int requested) {
  if (!mpfr_buildopt_tls_p()) return 1;
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RAYCLASS_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace rayclass
