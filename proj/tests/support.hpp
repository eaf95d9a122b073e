#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "schurpat/error.hpp"
#include "schurpat/random.hpp"

namespace schurpat::test {

// Nonincreasing, nonnegative, with roughly one zero in five.
inline std::vector<double> random_profile(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform01(rng) < 0.2 ? 0.0 : uniform01(rng);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline std::vector<double> shuffled(std::vector<double> v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  return v;
}

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); }

template <typename F>
void expect_errc(Errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace schurpat::test
