#pragma once

#include "quadlie/coeffs.hpp"
#include "quadlie/linalg.hpp"

#include <cstdint>
#include <random>

namespace quadlie {

/// Seeded source for every randomized routine: std::mt19937_64 with
/// coefficients mapped by (x mod 7) - 3 into {-3..3}.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform-ish integer in [0, bound) by modulo reduction.
  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }
  /// Integer in {-3..3}.
  Scalar small() { return Scalar(static_cast<long>(below(7)) - 3); }
  /// Nonzero integer in {-3..-1, 1..3}.
  Scalar small_nonzero();
  /// True with probability roughly p (resolution 1e-6).
  bool chance(double p) { return static_cast<double>(below(1000000)) < p * 1e6; }

private:
  std::mt19937_64 gen_;
};

/// Each coefficient c_ijk, i<j<k, is drawn from {-3..3} when a density coin
/// comes up, and left zero otherwise.
CocycleCoeffs random_cocycle(std::size_t n, Rng &rng, double density = 1.0);

/// An invertible n x n matrix with small integer entries (rejection sampling).
Mat random_invertible(std::size_t n, Rng &rng);

} // namespace quadlie
