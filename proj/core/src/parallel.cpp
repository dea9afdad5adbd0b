#include "dahalab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace dahalab {

namespace {
std::atomic<unsigned> g_override{0};
}

void set_thread_count(unsigned count) {
  g_override.store(count);
}

unsigned thread_count() {
  if (unsigned o = g_override.load(); o > 0) return o;
  if (const char* env = std::getenv("DAHA_LAB_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace dahalab
