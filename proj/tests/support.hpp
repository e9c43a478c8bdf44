#pragma once

#include <cmath>
#include <random>
#include <vector>

namespace wigqpi::testing {

inline constexpr double kPi = 3.14159265358979323846;

/// Fixed-seed engine so property tests are reproducible.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

/// Random real unit vector of the given length.
inline std::vector<double> unit_vector(std::mt19937_64& g, std::size_t n) {
  std::normal_distribution<double> normal;
  std::vector<double> v(n);
  double norm = 0.0;
  for (auto& x : v) {
    x = normal(g);
    norm += x * x;
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return v;
}

/// Random probability vector of the given length.
inline std::vector<double> probability_vector(std::mt19937_64& g, std::size_t n) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto& x : p) {
    x = std::exponential_distribution<double>(1.0)(g);
    sum += x;
  }
  for (auto& x : p) x /= sum;
  return p;
}

}  // namespace wigqpi::testing
