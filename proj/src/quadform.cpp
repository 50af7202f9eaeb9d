#include "quadlie/quadform.hpp"

#include <sstream>

namespace quadlie {

std::vector<std::array<std::size_t, 3>> invariance_defect(const AlgebraData &alg, const Mat &form) {
  const std::size_t n = alg.dim();
  if (form.rows() != n || form.cols() != n)
    throw std::invalid_argument("invariance_defect: form size does not match algebra");
  if (!form.is_symmetric())
    throw std::invalid_argument("invariance_defect: form is not symmetric");
  // lowered[i][j][k] = phi([e_i, e_j], e_k)
  std::vector<std::vector<Vec>> lowered(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lowered[i][j] = form * alg.basis_bracket(i, j);
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(lowered[i][j][k] + lowered[i][k][j]).is_zero())
          out.push_back({i, j, k});
  return out;
}

Scalar pairing(const Mat &form, std::span<const Scalar> x, std::span<const Scalar> y) {
  return dot(x, form * y);
}

Mat hyperbolic_form(std::size_t n) {
  Mat f(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    f(i, n + i) = 1;
    f(n + i, i) = 1;
  }
  return f;
}

std::vector<std::string> QuadraticStructure::problems(const AlgebraData &alg, const Mat &form) {
  std::vector<std::string> out;
  const std::size_t n = alg.dim();
  if (form.rows() != n || form.cols() != n) {
    out.push_back("form is not " + std::to_string(n) + "x" + std::to_string(n));
    return out;
  }
  if (!form.is_symmetric()) {
    out.push_back("form is not symmetric");
    return out;
  }
  if (rank(form) != n)
    out.push_back("form is degenerate");
  if (const auto j = jacobi_defect(alg); !j.empty()) {
    const auto &t = j.front().triple;
    std::ostringstream os;
    os << "Jacobi identity fails on (" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << ")";
    out.push_back(os.str());
  }
  if (const auto d = invariance_defect(alg, form); !d.empty()) {
    const auto &t = d.front();
    std::ostringstream os;
    os << "form is not invariant on (" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << ")";
    out.push_back(os.str());
  }
  return out;
}

QuadraticStructure::QuadraticStructure(AlgebraData alg, Mat form)
    : alg_(std::move(alg)), form_(std::move(form)) {
  if (const auto p = problems(alg_, form_); !p.empty()) {
    std::string msg = "not a quadratic Lie algebra:";
    for (const auto &s : p)
      msg += " " + s + ";";
    throw ValidationError(msg);
  }
}

QuadraticStructure change_basis(const QuadraticStructure &q, const Mat &p) {
  return QuadraticStructure(change_basis(q.alg(), p), p.transpose() * q.form() * p);
}

QuadraticStructure direct_sum(const QuadraticStructure &a, const QuadraticStructure &b) {
  const std::size_t n = a.dim() + b.dim();
  Mat f(n, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      f(i, j) = a.form()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      f(a.dim() + i, a.dim() + j) = b.form()(i, j);
  return QuadraticStructure(direct_sum(a.alg(), b.alg()), f);
}

Subspace orthogonal_complement(const Mat &form, const Subspace &s) {
  if (s.ambient_dim() != form.rows())
    throw std::invalid_argument("orthogonal_complement: dimension mismatch");
  if (s.is_zero())
    return Subspace::full(form.rows());
  return kernel(s.basis() * form);
}

Subspace orthogonal_complement(const QuadraticStructure &q, const Subspace &s) {
  return orthogonal_complement(q.form(), s);
}

bool is_isotropic(const Mat &form, const Subspace &s) {
  if (s.is_zero())
    return true;
  const Mat b = s.basis();
  return (b * form * b.transpose()).is_zero();
}

bool is_lagrangian(const Mat &form, const Subspace &s) {
  if (s.ambient_dim() != form.rows())
    return false;
  return orthogonal_complement(form, s) == s;
}

bool is_lagrangian(const QuadraticStructure &q, const Subspace &s) { return is_lagrangian(q.form(), s); }

Mat hyperbolic_dual_basis(const Mat &form, const Subspace &s) {
  if (!is_lagrangian(form, s))
    throw std::invalid_argument("hyperbolic_dual_basis: subspace is not lagrangian");
  const std::size_t n = form.rows();
  const std::size_t m = s.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : s.pivots())
    is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c])
      free_cols.push_back(c);

  // Complement candidates are the unit vectors on the free columns.
  Mat comp(m, n);
  for (std::size_t b = 0; b < m; ++b)
    comp(b, free_cols[b]) = 1;
  const Mat pairing_matrix = s.basis() * form * comp.transpose();
  const auto pinv = inverse(pairing_matrix);
  if (!pinv)
    throw std::logic_error("hyperbolic_dual_basis: pairing with complement is singular");
  // dual rows: c'_b = sum_d pinv(d, b) e_{free_d}, so phi(s_a, c'_b) = delta_ab.
  Mat dual = pinv->transpose() * comp;
  // Isotropic correction c''_b = c'_b - 1/2 sum_k phi(c'_b, c'_k) s_k.
  const Mat gram = dual * form * dual.transpose();
  const Mat corrected = dual - Scalar(1, 2) * (gram * s.basis());
  return corrected;
}

Subspace lagrangian_complement(const QuadraticStructure &q, const Subspace &s) {
  return Subspace::row_space(hyperbolic_dual_basis(q.form(), s));
}

bool is_isometric_isomorphism(const QuadraticStructure &q1, const QuadraticStructure &q2, const Mat &m) {
  const std::size_t n = q1.dim();
  if (q2.dim() != n || m.rows() != n || m.cols() != n)
    return false;
  if (rank(m) != n)
    return false;
  if (m.transpose() * q2.form() * m != q1.form())
    return false;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(m.col_vec(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m * q1.alg().basis_bracket(i, j) != q2.alg().bracket(images[i], images[j]))
        return false;
  return true;
}

} // namespace quadlie
