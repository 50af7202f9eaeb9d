#include "quadlie/doubleext.hpp"

#include <sstream>

namespace quadlie {

namespace {

std::string triple_str(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

Mat commutator(const Mat &x, const Mat &y) { return x * y - y * x; }

} // namespace

bool is_derivation(const AlgebraData &a, const Mat &d) {
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n)
    return false;
  std::vector<Vec> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = d.col_vec(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = d * a.basis_bracket(i, j);
      const Vec rhs = a.bracket(images[i], unit_vec(n, j)) + a.bracket(unit_vec(n, i), images[j]);
      if (lhs != rhs)
        return false;
    }
  return true;
}

bool is_form_skew(const Mat &form, const Mat &d) {
  if (d.rows() != form.rows() || d.cols() != form.cols())
    return false;
  return (d.transpose() * form + form * d).is_zero();
}

SkewDerivation::SkewDerivation(const QuadraticStructure &q, Mat d) : d_(std::move(d)) {
  if (d_.rows() != q.dim() || d_.cols() != q.dim())
    throw ValidationError("derivation has wrong size");
  if (!is_derivation(q.alg(), d_))
    throw ValidationError("map is not a derivation");
  if (!is_form_skew(q.form(), d_))
    throw ValidationError("derivation is not skew for the form");
}

std::vector<Mat> skew_derivations(const QuadraticStructure &q) {
  const std::size_t n = q.dim();
  if (n == 0)
    return {};
  const auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vec> rows;
  // Derivation law on e_i, e_j, coordinate s.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec bij = q.alg().basis_bracket(i, j);
      std::vector<Vec> bj(n), bi(n);
      for (std::size_t r = 0; r < n; ++r) {
        bj[r] = q.alg().basis_bracket(r, j);
        bi[r] = q.alg().basis_bracket(i, r);
      }
      for (std::size_t s = 0; s < n; ++s) {
        Vec row = zero_vec(n * n);
        for (std::size_t r = 0; r < n; ++r) {
          row[var(s, r)] += bij[r];
          row[var(r, i)] -= bj[r][s];
          row[var(r, j)] -= bi[r][s];
        }
        if (!is_zero(row))
          rows.push_back(std::move(row));
      }
    }
  // Skewness phi(d e_i, e_j) + phi(e_i, d e_j) = 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec row = zero_vec(n * n);
      for (std::size_t r = 0; r < n; ++r) {
        row[var(r, i)] += q.form()(r, j);
        row[var(r, j)] += q.form()(i, r);
      }
      if (!is_zero(row))
        rows.push_back(std::move(row));
    }
  const Subspace sol = rows.empty() ? Subspace::full(n * n) : kernel(Mat::from_rows(rows, n * n));
  std::vector<Mat> out;
  for (const auto &v : sol.vectors()) {
    Mat d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        d(r, c) = v[var(r, c)];
    out.push_back(std::move(d));
  }
  return out;
}

QuadraticStructure double_extend(const QuadraticStructure &aq, const AlgebraData &b, const std::vector<Mat> &phi) {
  const std::size_t m = b.dim();
  const std::size_t na = aq.dim();
  if (phi.size() != m)
    throw ValidationError("double_extend: need one derivation per basis vector of B");
  if (m == 0)
    return aq;
  if (const auto j = jacobi_defect(b); !j.empty())
    throw ValidationError("double_extend: B is not a Lie algebra");
  for (std::size_t i = 0; i < m; ++i) {
    try {
      SkewDerivation(aq, phi[i]);
    } catch (const ValidationError &e) {
      throw ValidationError("double_extend: phi(b_" + std::to_string(i + 1) + "): " + e.what());
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vec c = b.basis_bracket(i, j);
      Mat image(na, na);
      for (std::size_t l = 0; l < m; ++l)
        if (!c[l].is_zero())
          image = image + c[l] * phi[l];
      if (image != commutator(phi[i], phi[j]))
        throw ValidationError("double_extend: phi is not a homomorphism on " + triple_str(i, j));
    }

  const std::size_t n = 2 * m + na;
  const std::size_t a0 = m;
  const std::size_t s0 = m + na;
  AlgebraData out(n);
  const auto place = [&](Vec &dst, std::size_t offset, const Vec &src) {
    for (std::size_t t = 0; t < src.size(); ++t)
      dst[offset + t] += src[t];
  };
  // [b_i, b_j] and [b_i, beta_j] = ad*(b_i) beta_j = -sum_l c_il^j beta_l.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec v = zero_vec(n);
      place(v, 0, b.basis_bracket(i, j));
      out.set_bracket(i, j, v);
    }
    for (std::size_t j = 0; j < m; ++j) {
      Vec v = zero_vec(n);
      for (std::size_t l = 0; l < m; ++l)
        v[s0 + l] = -b.basis_bracket(i, l)[j];
      out.set_bracket(i, s0 + j, v);
    }
    for (std::size_t k = 0; k < na; ++k) {
      Vec v = zero_vec(n);
      place(v, a0, phi[i].col_vec(k));
      out.set_bracket(i, a0 + k, v);
    }
  }
  // [a_k, a_l] = [a_k, a_l]_A + sum_i f(phi_i a_k, a_l) beta_i.
  for (std::size_t k = 0; k < na; ++k)
    for (std::size_t l = k + 1; l < na; ++l) {
      Vec v = zero_vec(n);
      place(v, a0, aq.alg().basis_bracket(k, l));
      for (std::size_t i = 0; i < m; ++i)
        v[s0 + i] = aq.pairing(phi[i].col_vec(k), unit_vec(na, l));
      out.set_bracket(a0 + k, a0 + l, v);
    }

  Mat f(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    f(i, s0 + i) = 1;
    f(s0 + i, i) = 1;
  }
  for (std::size_t k = 0; k < na; ++k)
    for (std::size_t l = 0; l < na; ++l)
      f(a0 + k, a0 + l) = aq.form()(k, l);
  return QuadraticStructure(std::move(out), std::move(f));
}

QuadraticStructure double_extend_1d(const QuadraticStructure &aq, const SkewDerivation &sd) {
  const Mat &d = sd.matrix();
  const std::size_t na = aq.dim();
  if (d.rows() != na)
    throw ValidationError("double_extend_1d: derivation has wrong size");
  const std::size_t n = na + 2;
  const std::size_t beta = n - 1;
  AlgebraData out(n);
  for (std::size_t j = 0; j < na; ++j) {
    Vec v = zero_vec(n);
    const Vec dj = d.col_vec(j);
    for (std::size_t t = 0; t < na; ++t)
      v[1 + t] = dj[t];
    out.set_bracket(0, 1 + j, v);
  }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) {
      Vec v = zero_vec(n);
      const Vec aij = aq.alg().basis_bracket(i, j);
      for (std::size_t t = 0; t < na; ++t)
        v[1 + t] = aij[t];
      v[beta] = aq.pairing(d.col_vec(i), unit_vec(na, j));
      out.set_bracket(1 + i, 1 + j, v);
    }
  Mat f(n, n);
  f(0, beta) = 1;
  f(beta, 0) = 1;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      f(1 + i, 1 + j) = aq.form()(i, j);
  return QuadraticStructure(std::move(out), std::move(f));
}

std::optional<Vec> inner_element(const AlgebraData &a, const Mat &d) {
  const std::size_t n = a.dim();
  if (n == 0)
    return Vec{};
  // (ad x)(r, q) = sum_i x_i [e_i, e_q]_r.
  Mat sys(n * n, n);
  Vec rhs(n * n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t i = 0; i < n; ++i) {
      const Vec b = a.basis_bracket(i, q);
      for (std::size_t r = 0; r < n; ++r)
        sys(r * n + q, i) = b[r];
    }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t q = 0; q < n; ++q)
      rhs[r * n + q] = d(r, q);
  return solve(sys, rhs);
}

Subspace centre_formula_1d(const QuadraticStructure &aq, const SkewDerivation &sd) {
  const std::size_t na = aq.dim();
  const std::size_t n = na + 2;
  const Subspace core = centre(aq.alg()).intersect(kernel(sd.matrix()));
  Subspace z = core.embed(n, 1) + Subspace::span(n, {unit_vec(n, n - 1)});
  if (const auto x = inner_element(aq.alg(), sd.matrix())) {
    Vec v = zero_vec(n);
    v[0] = 1;
    for (std::size_t t = 0; t < na; ++t)
      v[1 + t] = -(*x)[t];
    z = z + Subspace::span(n, {v});
  }
  return z;
}

bool two_step_criterion(const QuadraticStructure &aq, const SkewDerivation &sd) {
  const Mat &d = sd.matrix();
  const Subspace s = Subspace::col_space(d) + derived_algebra(aq.alg());
  if (s.is_zero())
    return false;
  return centre(aq.alg()).intersect(kernel(d)).contains(s);
}

ExtensionChain::ExtensionChain(std::vector<Mat> derivs) : derivs_(std::move(derivs)) {
  for (std::size_t k = 0; k < derivs_.size(); ++k) {
    const Mat &d = derivs_[k];
    if (d.rows() != 2 * k || d.cols() != 2 * k)
      throw std::invalid_argument("ExtensionChain: d_" + std::to_string(k) + " must be " + std::to_string(2 * k) +
                                  "x" + std::to_string(2 * k));
    if (!d.is_zero())
      nnp_ = true;
  }
  two_sp_ = true;
  for (std::size_t k = 1; k < derivs_.size() && two_sp_; ++k) {
    const Mat &d = derivs_[k];
    for (std::size_t r = 0; r < 2 * k && two_sp_; ++r)
      for (std::size_t c = 0; c < 2 * k; ++c)
        if ((r < k || c >= k) && !d(r, c).is_zero()) {
          two_sp_ = false;
          break;
        }
  }
}

std::vector<QuadraticStructure> chain_algebras(const ExtensionChain &ch) {
  std::vector<QuadraticStructure> out;
  out.emplace_back(AlgebraData(0), Mat(0, 0));
  for (std::size_t k = 0; k < ch.n(); ++k) {
    const QuadraticStructure &ak = out.back();
    std::optional<SkewDerivation> sd;
    try {
      sd.emplace(ak, ch.derivs()[k]);
    } catch (const ValidationError &e) {
      throw ValidationError("chain link d_" + std::to_string(k) + ": " + e.what());
    }
    const QuadraticStructure ext = double_extend_1d(ak, *sd);
    // ext basis: b_{k+1}, b_1..b_k, b_1*..b_k*, b_{k+1}*; canonical puts b_{k+1} at position k.
    const std::size_t n = 2 * k + 2;
    Mat p(n, n);
    p(0, k) = 1;
    for (std::size_t i = 0; i < k; ++i)
      p(1 + i, i) = 1;
    for (std::size_t i = k + 1; i < n; ++i)
      p(i, i) = 1;
    out.push_back(change_basis(ext, p));
  }
  return out;
}

ExtensionChain build_chain(const CocycleCoeffs &c) {
  const std::size_t n = c.n();
  if (n < 3)
    throw std::invalid_argument("build_chain: need n >= 3");
  std::vector<Mat> derivs;
  for (std::size_t k = 0; k < n; ++k) {
    // d_k acts on A_k and sends b_j (j <= k) to sum_{l <= k} c_{k+1, j, l} b_l*.
    Mat d(2 * k, 2 * k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        d(k + l, j) = c.get(k, j, l);
    derivs.push_back(std::move(d));
  }
  return ExtensionChain(std::move(derivs));
}

Dcoeffs chain_products(const ExtensionChain &ch) {
  const std::size_t n = ch.n();
  Dcoeffs out(n);
  // For p < q < r: D_pqr = f_r(d_r(b_p), b_q), the b_q* coordinate of d_r(b_p).
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r)
        out.set(p, q, r, ch.derivs()[r](r + q, p));
  return out;
}

QuadraticStructure chain_to_algebra(const ExtensionChain &ch) {
  if (!ch.nnp())
    throw ValidationError("chain_to_algebra: chain fails the non-null property");
  if (!ch.two_step_property())
    throw ValidationError("chain_to_algebra: chain fails the two-step property");
  // Under the two-step property each d_k is a derivation automatically; only skewness is left.
  for (std::size_t k = 0; k < ch.n(); ++k)
    if (!is_form_skew(hyperbolic_form(k), ch.derivs()[k]))
      throw ValidationError("chain_to_algebra: d_" + std::to_string(k) + " is not skew");
  const std::size_t n = ch.n();
  const Dcoeffs dc = chain_products(ch);
  AlgebraData alg(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = zero_vec(2 * n);
      for (std::size_t k = 0; k < n; ++k)
        v[n + k] = dc.get(i, j, k);
      alg.set_bracket(i, j, v);
    }
  return QuadraticStructure(std::move(alg), hyperbolic_form(n));
}

Scalar w_hat(const ExtensionChain &ch, std::size_t k, std::size_t i, std::size_t j) {
  const auto s = sort_with_sign(i, j, k);
  if (!s)
    return Scalar();
  // Move the largest index into the slot of k, keeping the cyclic order of the other two.
  const std::size_t top = s->first[2];
  std::size_t x = i, y = j;
  if (top == i) {
    x = j;
    y = k;
  } else if (top == j) {
    x = k;
    y = i;
  }
  // w_top(b_x, b_y) = f_{top}(d_{top}(b_x), b_y) evaluated in A_top (0-based top = link index).
  const Mat &d = ch.derivs()[top];
  const Vec dx = d.col_vec(x);
  const Mat f = hyperbolic_form(top);
  return pairing(f, dx, unit_vec(2 * top, y));
}

bool chain_reduced_check(const ExtensionChain &ch) {
  const std::size_t n = ch.n();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Vec v(n);
      for (std::size_t k = 0; k < n; ++k)
        v[k] = w_hat(ch, k, i, j);
      rows.push_back(std::move(v));
    }
  if (rows.empty())
    return n == 0;
  return rank(Mat::from_rows(rows, n)) == n;
}

Mat telescopic_order(const Mat &d) {
  const std::size_t k = d.rows() / 2;
  const auto pos = [k](std::size_t p) { return p < k ? k - 1 - p : p; };
  Mat out(d.rows(), d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      out(r, c) = d(pos(r), pos(c));
  return out;
}

} // namespace quadlie
