#ifndef COVERLRC_SAMPLING_HPP
#define COVERLRC_SAMPLING_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "coverlrc/cover_metric.hpp"

namespace coverlrc {

/// Unbiased draw from [0, n) via rejection; mt19937_64 output is fully
/// specified by the standard, so results are platform-independent.
inline uint64_t bounded_u64(std::mt19937_64& rng, uint64_t n) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline uint32_t random_element(std::mt19937_64& rng, const Field& f) {
  return static_cast<uint32_t>(bounded_u64(rng, f.order()));
}

inline uint32_t random_nonzero(std::mt19937_64& rng, const Field& f) {
  return 1 + static_cast<uint32_t>(bounded_u64(rng, f.order() - 1));
}

inline Matrix random_matrix(std::mt19937_64& rng, const Field& f, size_t rows, size_t cols) {
  Matrix out(f, rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) out(r, c) = random_element(rng, f);
  return out;
}

/// Uniform t-subset of the lines 1..universe (Fisher-Yates prefix).
inline LineSet sample_line_set(std::mt19937_64& rng, size_t universe, size_t t) {
  std::vector<unsigned> pool(universe);
  std::iota(pool.begin(), pool.end(), 1u);
  for (size_t i = 0; i < t; ++i) {
    const size_t j = i + static_cast<size_t>(bounded_u64(rng, universe - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(t);
  return LineSet(std::move(pool));
}

}  // namespace coverlrc

#endif  // COVERLRC_SAMPLING_HPP
