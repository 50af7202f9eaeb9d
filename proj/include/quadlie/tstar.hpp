#pragma once

#include "quadlie/coeffs.hpp"
#include "quadlie/quadform.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadlie {

/// A bilinear map w: B x B -> B* on a possibly non-abelian base, given on
/// basis pairs i < j (skew extension implied). Missing pairs are zero.
class GeneralCocycle {
public:
  GeneralCocycle() = default;
  explicit GeneralCocycle(AlgebraData base) : base_(std::move(base)) {}
  /// The cocycle induced by alternating coefficients on an abelian base.
  static GeneralCocycle from_coeffs(const CocycleCoeffs &c);

  const AlgebraData &base() const { return base_; }
  std::size_t dim() const { return base_.dim(); }

  /// Sets w(e_i, e_j) = v (covector coordinates); swapped indices store -v.
  void set(std::size_t i, std::size_t j, const Vec &v);
  /// w(e_i, e_j) as a covector; w(e_i, e_i) = 0.
  Vec value(std::size_t i, std::size_t j) const;
  /// w(e_i, e_j)(e_k).
  Scalar eval(std::size_t i, std::size_t j, std::size_t k) const { return value(i, j)[k]; }
  const std::map<std::pair<std::size_t, std::size_t>, Vec> &values() const { return values_; }

  friend bool operator==(const GeneralCocycle &, const GeneralCocycle &) = default;

private:
  AlgebraData base_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> values_;
};

/// First basis triple (i, j, k) breaking w(a,b)(c) = w(c,a)(b) = w(b,c)(a).
std::optional<std::array<std::size_t, 3>> cyclic_violation(const GeneralCocycle &w);
bool is_cyclic(const GeneralCocycle &w);

/// First basis triple i<j<k breaking the 2-cocycle identity for the coadjoint
/// module. Throws std::domain_error when the base is not a Lie algebra.
std::optional<std::array<std::size_t, 3>> cocycle_violation(const GeneralCocycle &w);
bool is_two_cocycle(const GeneralCocycle &w);

/// The bracket on B + B* (basis e_1..e_n, e_1*..e_n*) without any validation.
AlgebraData tstar_product(const GeneralCocycle &w);

/// T*_w B with the hyperbolic form. Throws ValidationError naming the broken
/// law and the first violating triple.
QuadraticStructure tstar_extend(const GeneralCocycle &w);
QuadraticStructure tstar_extend(const CocycleCoeffs &c);

/// {b : w(b, .) = 0}.
Subspace radical(const GeneralCocycle &w);

struct ReducedCriteria {
  bool reduced;
  bool nondegenerate;
  bool span_full;
  friend bool operator==(const ReducedCriteria &, const ReducedCriteria &) = default;
};

/// The three conditions for an abelian base, each computed on its own:
/// reducedness of T*_w B, rad w = 0, and span{w(b, b')} = B*.
ReducedCriteria reduced_criteria(const GeneralCocycle &w);

struct TstarDecomposition {
  AlgebraData base;
  GeneralCocycle cocycle;
  /// Maps coordinates of q to coordinates of tstar_extend(cocycle).
  Mat iso;
};

/// Writes q as a T*-extension of A/I for a lagrangian abelian ideal I.
/// Throws ValidationError when the preconditions fail.
TstarDecomposition decompose_as_tstar(const QuadraticStructure &q, const Subspace &ideal);

/// A lagrangian ideal of q, or nullopt. Tries A^2 (which works for reduced
/// 2-step algebras) and, for abelian q, an isotropic greedy search.
std::optional<Subspace> find_lagrangian_ideal(const QuadraticStructure &q);

/// Basis of the cyclic 2-cocycles on a Lie algebra B.
std::vector<GeneralCocycle> cyclic_cocycle_space(const AlgebraData &b);

/// T*_0 B with the form q_B(x, y) + f(x, y) for an invariant symmetric f on B.
QuadraticStructure inflate(const AlgebraData &b, const Mat &f);

} // namespace quadlie
