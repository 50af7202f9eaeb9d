#include "quadlie/quadfam.hpp"

#include <stdexcept>

namespace quadlie {

std::vector<FamilyViolation> validate_family(const QuadraticFamily &f) {
  std::vector<FamilyViolation> out;
  const std::size_t n = f.n;
  if (f.mats.size() != n) {
    out.push_back({0, 0, 0, "expected " + std::to_string(n) + " matrices"});
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (f.mats[i].rows() != n || f.mats[i].cols() != n) {
      out.push_back({0, i + 1, 0, "M_" + std::to_string(i + 1) + " is not " + std::to_string(n) + "x" + std::to_string(n)});
      return out;
    }
  for (std::size_t i = 0; i < n; ++i) {
    const Mat &m = f.mats[i];
    if (!m.is_skew())
      out.push_back({1, i + 1, 0, "M_" + std::to_string(i + 1) + " is not skew-symmetric"});
    if (!is_zero(m.col_vec(i)))
      out.push_back({2, i + 1, i + 1, "column " + std::to_string(i + 1) + " of M_" + std::to_string(i + 1) + " is not zero"});
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.col_vec(j) != Scalar(-1) * f.mats[j].col_vec(i))
        out.push_back({3, i + 1, j + 1,
                       "column " + std::to_string(j + 1) + " of M_" + std::to_string(i + 1) + " is not minus column " +
                           std::to_string(i + 1) + " of M_" + std::to_string(j + 1)});
  }
  return out;
}

bool is_valid_family(const QuadraticFamily &f) { return validate_family(f).empty(); }

Mat f_matrix(const QuadraticFamily &f) {
  if (!is_valid_family(f))
    throw std::invalid_argument("f_matrix: invalid family");
  const std::size_t n = f.n;
  Mat out(n, n * (n - (n > 0 ? 1 : 0)) / 2);
  std::size_t col = 0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++col)
      out.set_col(col, f.mats[i].col_vec(j));
  return out;
}

bool is_nondegenerate_family(const QuadraticFamily &f) {
  const Mat m = f_matrix(f);
  return m.cols() > 0 && rank(m) == f.n;
}

QuadraticStructure algebra_from_family(const QuadraticFamily &f) {
  if (const auto v = validate_family(f); !v.empty())
    throw ValidationError("algebra_from_family: law " + std::to_string(v.front().law) + ": " + v.front().message);
  const std::size_t n = f.n;
  bool nonzero = false;
  for (const auto &m : f.mats)
    nonzero = nonzero || !m.is_zero();
  if (!nonzero)
    throw ValidationError("algebra_from_family: zero family gives no 2-step algebra");
  AlgebraData alg(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = zero_vec(2 * n);
      for (std::size_t k = 0; k < n; ++k)
        v[n + k] = f.mats[i](k, j);
      alg.set_bracket(i, j, v);
    }
  return QuadraticStructure(std::move(alg), hyperbolic_form(n));
}

} // namespace quadlie
