#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "schurpat/spectra.hpp"

namespace schurpat {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream seed for the `index`-th trial of a run seeded with `seed`.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Standard complex Gaussian entries (independent real and imaginary parts).
Matrix gaussian_matrix(std::size_t n, Rng& rng);
Eigen::VectorXcd gaussian_vector(std::size_t n, Rng& rng);
/// Real Gaussian entries.
Matrix real_gaussian_matrix(std::size_t n, Rng& rng);
/// Haar-distributed unitary from the QR factorisation of a Gaussian matrix.
Matrix random_unitary(std::size_t n, Rng& rng);
/// Complex number uniform in the closed unit disc.
Complex unit_disc_sample(Rng& rng);

}  // namespace schurpat
