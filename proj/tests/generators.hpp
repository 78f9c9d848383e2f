#pragma once

// Random inputs for the property tests.

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "fatpoint3/system.hpp"

namespace fatpoint3::testing {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  LinearSystem system(int max_degree, int max_points, int min_mult = 0) {
    LinearSystem out;
    out.degree = uniform(0, max_degree);
    const int r = uniform(0, max_points);
    for (int i = 0; i < r; ++i) {
      out.mults.push_back(uniform(min_mult, out.degree));
    }
    return out;
  }

  CurveClass curve(int max_degree, int points, int min_mult = 0) {
    CurveClass out;
    out.degree = uniform(-max_degree, max_degree);
    for (int i = 0; i < points; ++i) {
      out.mults.push_back(uniform(min_mult, max_degree));
    }
    return out;
  }

  std::array<int, 4> quadruple(int points) {
    std::vector<int> idx(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng_);
    return {idx[0], idx[1], idx[2], idx[3]};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fatpoint3::testing
