#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace icdistill {

using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 bits of entropy.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller. Draws two words per sample; no cached spare,
// so the stream consumed is a pure function of call count.
inline double normal(Rng& rng) {
  double u1 = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

// Uniform integer in [lo, hi] inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
  auto span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

// Fisher-Yates.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    std::swap(v[i], v[uniform_int(rng, 0, i)]);
  }
}

// k distinct indices from [0, n), returned sorted ascending.
std::vector<int> sample_without_replacement(int n, int k, Rng& rng);

}  // namespace icdistill
