#include "triloc/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace triloc {

int worker_count() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("TRILOC_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0 && cap < n) n = cap;
    } catch (const std::exception&) {
      // Ignore malformed values; the variable only affects speed.
    }
  }
  return n < 1 ? 1 : n;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) noexcept {
  return mix64(mix64(mix64(seed) ^ salt) ^ index);
}

}  // namespace triloc
