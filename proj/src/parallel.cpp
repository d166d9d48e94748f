#include "polyrad/parallel.hpp"

#include <cstdlib>
#include <string>

namespace polyrad {

int worker_count() {
  if (const char *env = std::getenv("POLYRAD_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0)
        return n;
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {
bool &inside_worker() {
  thread_local bool flag = false;
  return flag;
}
} // namespace detail

} // namespace polyrad
