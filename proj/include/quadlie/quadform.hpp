#pragma once

#include "quadlie/algebra.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadlie {

/// Raised when a construction's input breaks one of its defining laws.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Basis triples (i, j, k) with phi([e_i,e_j], e_k) + phi(e_j, [e_i,e_k]) != 0.
/// Throws std::invalid_argument for a non-symmetric form.
std::vector<std::array<std::size_t, 3>> invariance_defect(const AlgebraData &alg, const Mat &form);

/// phi(x, y) for the Gram matrix `form`.
Scalar pairing(const Mat &form, std::span<const Scalar> x, std::span<const Scalar> y);

/// The hyperbolic Gram matrix on e_1..e_n, e_1*..e_n*: phi(e_i, e_j*) = delta_ij.
Mat hyperbolic_form(std::size_t n);

/// A Lie algebra with a symmetric, non-degenerate, invariant bilinear form.
/// Construction validates all four conditions and throws ValidationError.
class QuadraticStructure {
public:
  QuadraticStructure(AlgebraData alg, Mat form);

  /// Reasons the pair fails to be quadratic; empty when it is.
  static std::vector<std::string> problems(const AlgebraData &alg, const Mat &form);

  const AlgebraData &alg() const { return alg_; }
  const Mat &form() const { return form_; }
  std::size_t dim() const { return alg_.dim(); }

  Scalar pairing(std::span<const Scalar> x, std::span<const Scalar> y) const {
    return quadlie::pairing(form_, x, y);
  }

  friend bool operator==(const QuadraticStructure &, const QuadraticStructure &) = default;

private:
  AlgebraData alg_;
  Mat form_;
};

/// The same quadratic algebra expressed in a new basis (columns of `p`).
QuadraticStructure change_basis(const QuadraticStructure &q, const Mat &p);
/// Orthogonal direct sum.
QuadraticStructure direct_sum(const QuadraticStructure &a, const QuadraticStructure &b);

/// {x : phi(x, s) = 0 for all s in S}.
Subspace orthogonal_complement(const QuadraticStructure &q, const Subspace &s);
Subspace orthogonal_complement(const Mat &form, const Subspace &s);

bool is_isotropic(const Mat &form, const Subspace &s);
/// S equal to its own orthogonal complement.
bool is_lagrangian(const QuadraticStructure &q, const Subspace &s);
bool is_lagrangian(const Mat &form, const Subspace &s);

/// Rows c_1..c_m of an isotropic complement to the lagrangian S whose
/// pairing with the RREF basis s_1..s_m of S is phi(s_a, c_b) = delta_ab.
/// Throws std::invalid_argument when S is not lagrangian.
Mat hyperbolic_dual_basis(const Mat &form, const Subspace &s);

/// An isotropic subspace S' with S + S' = whole space and a perfect pairing
/// S x S' -> K. The choice is deterministic: the coordinate complement on the
/// non-pivot columns of S, dualised and then made isotropic.
Subspace lagrangian_complement(const QuadraticStructure &q, const Subspace &s);

/// m maps q1 into q2; true when m is invertible, preserves brackets on all
/// basis pairs and preserves the form on all basis pairs.
bool is_isometric_isomorphism(const QuadraticStructure &q1, const QuadraticStructure &q2, const Mat &m);

} // namespace quadlie
