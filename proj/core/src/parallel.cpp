#include "hamrep/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hamrep {

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("HAMREP_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1 && cap < n) n = cap;
    } catch (...) {
      // Unparseable values fall back to hardware concurrency.
    }
  }
  return n;
}

}  // namespace hamrep
