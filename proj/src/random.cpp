#include "quadlie/random.hpp"

namespace quadlie {

Scalar Rng::small_nonzero() {
  const long v = static_cast<long>(below(6)) - 3;
  return Scalar(v >= 0 ? v + 1 : v);
}

CocycleCoeffs random_cocycle(std::size_t n, Rng &rng, double density) {
  CocycleCoeffs c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (rng.chance(density))
          c.set(i, j, k, rng.small());
  return c;
}

Mat random_invertible(std::size_t n, Rng &rng) {
  for (;;) {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = rng.small();
    if (rank(m) == n)
      return m;
  }
}

} // namespace quadlie
