#pragma once

#include "quadlie/linalg.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace quadlie {

/// A finite-dimensional algebra given by structure constants on a basis
/// e_0..e_{n-1}. Only [e_i, e_j] with i < j is stored; [e_j, e_i] is the
/// negative and [e_i, e_i] = 0. A missing key is a zero bracket.
class AlgebraData {
public:
  AlgebraData() = default;
  explicit AlgebraData(std::size_t dim) : dim_(dim) {}

  static AlgebraData abelian(std::size_t dim) { return AlgebraData(dim); }
  /// The 3-dimensional Heisenberg algebra [x, y] = z.
  static AlgebraData heisenberg();

  std::size_t dim() const { return dim_; }

  /// Sets [e_i, e_j] = v. Swapped indices store -v; i == j requires v = 0.
  void set_bracket(std::size_t i, std::size_t j, const Vec &v);
  Vec basis_bracket(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, Vec> &brackets() const { return brackets_; }

  /// Bilinear extension of the basis brackets.
  Vec bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Matrix of ad e_i (column j holds [e_i, e_j]).
  Mat ad(std::size_t i) const;
  /// Matrix of ad x.
  Mat ad(std::span<const Scalar> x) const;

  bool is_abelian() const { return brackets_.empty(); }

  friend bool operator==(const AlgebraData &, const AlgebraData &) = default;

private:
  std::size_t dim_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Vec> brackets_;
};

/// Orthogonal direct sum of two algebras (basis of `a` first).
AlgebraData direct_sum(const AlgebraData &a, const AlgebraData &b);
/// Structure constants in a new basis; the columns of `p` are the new basis
/// vectors in old coordinates. `p` must be invertible.
AlgebraData change_basis(const AlgebraData &a, const Mat &p);

struct JacobiDefect {
  std::array<std::size_t, 3> triple;
  Vec defect;
};

/// Basis triples i<j<k whose Jacobi cyclic sum is nonzero.
std::vector<JacobiDefect> jacobi_defect(const AlgebraData &a);
bool is_lie(const AlgebraData &a);

/// span{[x, y]} over the whole algebra.
Subspace derived_algebra(const AlgebraData &a);
/// [A, S] for a subspace S.
Subspace bracket_with(const AlgebraData &a, const Subspace &s);
/// [S, T] for subspaces S and T.
Subspace bracket_of(const AlgebraData &a, const Subspace &s, const Subspace &t);

/// A^1 = A, A^{k+1} = [A, A^k], stopping at the first repeated term.
/// Throws std::domain_error when `a` violates the Jacobi identity.
std::vector<Subspace> lower_central_series(const AlgebraData &a);

/// Smallest t with A^{t+1} = 0, or nullopt when the series stabilises at a
/// nonzero subspace. The zero algebra has nilindex 0.
std::optional<std::size_t> nilindex(const AlgebraData &a);

Subspace centre(const AlgebraData &a);
/// Z_1 = Z(A), Z_{t+1} = {x : [x, A] in Z_t}, stopping at the first repeat.
std::vector<Subspace> upper_central_series(const AlgebraData &a);

/// {x : [x, S] in T}.
Subspace bracket_preimage(const AlgebraData &a, const Subspace &s, const Subspace &t);

bool is_ideal(const AlgebraData &a, const Subspace &s);

struct AlgebraType {
  std::size_t derived_dim;
  std::size_t centre_dim;
  friend bool operator==(const AlgebraType &, const AlgebraType &) = default;
};

AlgebraType algebra_type(const AlgebraData &a);
/// Z(A) contained in A^2.
bool is_reduced(const AlgebraData &a);

} // namespace quadlie
