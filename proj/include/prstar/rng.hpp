#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace prstar {

/// FNV-1a mix of a base seed and a tag; used to hand independent,
/// reproducible sub-streams to parallel tasks.
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < 8; ++i) {
    h ^= (seed >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Deterministic RNG.  std::uniform_int_distribution is implementation
/// defined, so bounded draws are done by rejection on the raw 64-bit stream;
/// identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, n).
  std::size_t below(std::size_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      std::uint64_t v = engine_();
      if (v < limit) return static_cast<std::size_t>(v % n);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace prstar
