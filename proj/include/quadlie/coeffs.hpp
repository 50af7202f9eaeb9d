#pragma once

#include "quadlie/scalar.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>

namespace quadlie {

using Triple = std::array<std::size_t, 3>;

/// Sorts a triple of distinct indices ascending and returns the sign of the
/// sorting permutation; nullopt when an index repeats.
std::optional<std::pair<Triple, int>> sort_with_sign(std::size_t i, std::size_t j, std::size_t k);

/// A fully alternating family c_ijk over n indices, stored once per sorted
/// triple i<j<k (0-based). Zero coefficients are never stored.
class AlternatingCoeffs {
public:
  AlternatingCoeffs() = default;
  explicit AlternatingCoeffs(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  /// Sign-resolved lookup in any index order; repeated indices give 0.
  Scalar get(std::size_t i, std::size_t j, std::size_t k) const;
  /// Sets the alternating family so that get(i, j, k) == v.
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar &v);
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar &v);

  const std::map<Triple, Scalar> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const AlternatingCoeffs &, const AlternatingCoeffs &) = default;

private:
  std::size_t n_ = 0;
  std::map<Triple, Scalar> terms_;
};

/// w(e_i, e_j)(e_k) = c_ijk for a cyclic 2-cocycle on an abelian algebra.
class CocycleCoeffs : public AlternatingCoeffs {
public:
  using AlternatingCoeffs::AlternatingCoeffs;
  explicit CocycleCoeffs(const AlternatingCoeffs &c) : AlternatingCoeffs(c) {}
};

/// Coordinates of sum t_ijk e_i* ^ e_j* ^ e_k* in the standard basis.
class Trivector : public AlternatingCoeffs {
public:
  using AlternatingCoeffs::AlternatingCoeffs;
  explicit Trivector(const AlternatingCoeffs &c) : AlternatingCoeffs(c) {}
};

/// The products D_ijk read off a chain of double extensions.
using Dcoeffs = AlternatingCoeffs;

/// Number of free coefficients of an alternating family over n indices.
std::size_t free_parameter_count(std::size_t n);

} // namespace quadlie
