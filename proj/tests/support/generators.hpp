#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "mec/distribution.hpp"

namespace mec::testing {

template <class T>
std::vector<T> to_vector(std::span<const T> s) {
  return {s.begin(), s.end()};
}

inline constexpr std::uint64_t kSeed = 0x5eed'c0de'2024ULL;

/// Masses that are positive multiples of 1/64, so all sums are exact.
inline std::vector<double> dyadic_masses(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> units(n, 1);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int left = 64 - static_cast<int>(n); left > 0; --left) ++units[pick(rng)];
  std::vector<double> out(n);
  std::transform(units.begin(), units.end(), out.begin(), [](int u) { return u / 64.0; });
  return out;
}

inline Distribution dyadic(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  return make_distribution(dyadic_masses(rng, size(rng)));
}

/// Continuous masses drawn from an exponential, then normalized.
inline std::vector<double> random_masses(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> out(n);
  double total = 0.0;
  for (auto& x : out) {
    x = draw(rng) + 1e-6;
    total += x;
  }
  for (auto& x : out) x /= total;
  return out;
}

inline Distribution random_distribution(std::mt19937_64& rng, std::size_t n) {
  return make_distribution(random_masses(rng, n), /*renormalize=*/true);
}

}  // namespace mec::testing
