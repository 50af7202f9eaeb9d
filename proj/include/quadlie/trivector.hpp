#pragma once

#include "quadlie/coeffs.hpp"
#include "quadlie/quadform.hpp"

#include <array>
#include <string>
#include <variant>

namespace quadlie {

/// The 2-form t(x, ., .) as a skew n x n matrix.
Mat contract(const Trivector &t, std::span<const Scalar> x);
/// {x : t(x, ., .) = 0}.
Subspace trivector_kernel(const Trivector &t);
std::size_t trivector_rank(const Trivector &t);

/// The role change between cyclic cocycles and trivectors; both share the
/// coordinates w(e_i, e_j)(e_k) = t(e_i, e_j, e_k).
inline Trivector delta(const CocycleCoeffs &w) { return Trivector(static_cast<const AlternatingCoeffs &>(w)); }
inline CocycleCoeffs delta_inv(const Trivector &t) { return CocycleCoeffs(static_cast<const AlternatingCoeffs &>(t)); }

/// T*_w of the abelian algebra for w = delta_inv(t). Requires t != 0, n >= 3.
QuadraticStructure algebra_from_trivector(const Trivector &t);

/// (sigma . t)(x, y, z) = t(sigma^-1 x, sigma^-1 y, sigma^-1 z).
/// Throws std::invalid_argument for a singular or mis-sized sigma.
Trivector gl_act(const Mat &sigma, const Trivector &t);

struct GlViolation {
  std::array<std::size_t, 3> triple;
  Scalar lhs; ///< t1(e_i, e_j, e_k)
  Scalar rhs; ///< t2(sigma e_i, sigma e_j, sigma e_k)
};

/// The map b + beta -> sigma(b) + beta o sigma^-1 between the T*-extensions of
/// t1 and t2, or the first triple where t1 = t2 o (sigma x sigma x sigma) fails.
std::variant<Mat, GlViolation> isometry_from_gl(const Mat &sigma, const Trivector &t1, const Trivector &t2);

/// Parses "123+145", "-2*123", "1*[1,2,3]+1*[10,11,12]" into a trivector on n
/// indices (n = 0 picks the largest index used). Throws std::invalid_argument.
Trivector parse_trivector(std::string_view text, std::size_t n = 0);
/// Inverse of parse_trivector in the compact digit form when all indices are
/// at most 9, the bracket form otherwise.
std::string format_trivector(const Trivector &t);

} // namespace quadlie
