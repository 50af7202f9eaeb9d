#pragma once

#include "quadlie/coeffs.hpp"
#include "quadlie/quadform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadlie {

bool is_derivation(const AlgebraData &a, const Mat &d);
/// phi(d x, y) + phi(x, d y) = 0 on all basis pairs.
bool is_form_skew(const Mat &form, const Mat &d);

/// An endomorphism of a quadratic algebra that is both a derivation and
/// skew with respect to its form. Construction checks both laws.
class SkewDerivation {
public:
  SkewDerivation(const QuadraticStructure &q, Mat d);
  const Mat &matrix() const { return d_; }

private:
  Mat d_;
};

/// Basis of the space of skew derivations of q (solved as a linear system).
std::vector<Mat> skew_derivations(const QuadraticStructure &q);

/// Double extension of (A, f) by (B, phi) on B + A + B*, in that basis order.
/// phi[i] is the image of the i-th basis vector of B; it must be a Lie
/// homomorphism into the skew derivations of A. Throws ValidationError.
QuadraticStructure double_extend(const QuadraticStructure &aq, const AlgebraData &b, const std::vector<Mat> &phi);

/// One-dimensional double extension by (b, d) on Kb + A + K beta.
QuadraticStructure double_extend_1d(const QuadraticStructure &aq, const SkewDerivation &d);

/// Some x with d = ad x, or nullopt when d is outer.
std::optional<Vec> inner_element(const AlgebraData &a, const Mat &d);

/// The centre of the one-dimensional double extension from its closed form:
/// (Z(A) n ker d) + K beta, plus K(b - x) when d = ad x. Coordinates follow
/// double_extend_1d (b first, beta last).
Subspace centre_formula_1d(const QuadraticStructure &aq, const SkewDerivation &d);

/// 0 != im d + A^2 and im d + A^2 contained in Z(A) n ker d.
bool two_step_criterion(const QuadraticStructure &aq, const SkewDerivation &d);

/// Chained one-dimensional double extensions A_0 = 0, A_{k+1} = (A_k)_{b_{k+1}}.
/// derivs[k] acts on A_k in the canonical basis b_1..b_k, b_1*..b_k*.
class ExtensionChain {
public:
  /// Checks shapes and d_0 = 0, and computes the NNP/2SP flags. Whether each
  /// d_k is a skew derivation is checked by chain_algebras().
  explicit ExtensionChain(std::vector<Mat> derivs);

  std::size_t n() const { return derivs_.size(); }
  const std::vector<Mat> &derivs() const { return derivs_; }
  /// Some d_k is nonzero.
  bool nnp() const { return nnp_; }
  /// im d_k in A_{k,2} in ker d_k for every k >= 1.
  bool two_step_property() const { return two_sp_; }

  friend bool operator==(const ExtensionChain &, const ExtensionChain &) = default;

private:
  std::vector<Mat> derivs_;
  bool nnp_ = false;
  bool two_sp_ = false;
};

/// A_0..A_n by iterating double_extend_1d, each re-expressed in the canonical
/// basis. Throws ValidationError when some d_k is not a skew derivation.
std::vector<QuadraticStructure> chain_algebras(const ExtensionChain &ch);

/// d_{i-1}(b_j) = sum_{k<i} c_ijk b_k*, d_{i-1}(b_j*) = 0. Requires n >= 3.
ExtensionChain build_chain(const CocycleCoeffs &c);

/// D_ijk = sgn(sigma) f_{sigma(k)-1}(d_{sigma(k)-1}(b_sigma(i)), b_sigma(j)) with
/// sigma the sorting permutation.
Dcoeffs chain_products(const ExtensionChain &ch);

/// The final algebra from the closed formula [b_i, b_j] = sum_k D_ijk b_k* with
/// hyperbolic form. Requires a valid chain with NNP and 2SP.
QuadraticStructure chain_to_algebra(const ExtensionChain &ch);

/// The alternating extension of w_k evaluated at (b_i, b_j): the b_k*
/// coefficient contributed by link k.
Scalar w_hat(const ExtensionChain &ch, std::size_t k, std::size_t i, std::size_t j);

/// A_{n,2} equals span{sum_k w_hat_k(b_i, b_j) b_k* : j < i}.
bool chain_reduced_check(const ExtensionChain &ch);

/// d_k re-ordered to the telescopic display basis b_k..b_1, b_1*..b_k*.
Mat telescopic_order(const Mat &d);

} // namespace quadlie
