#include "quadlie/algebra.hpp"

#include <stdexcept>

namespace quadlie {

AlgebraData AlgebraData::heisenberg() {
  AlgebraData h(3);
  h.set_bracket(0, 1, unit_vec(3, 2));
  return h;
}

void AlgebraData::set_bracket(std::size_t i, std::size_t j, const Vec &v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_)
    throw std::invalid_argument("set_bracket: index or length out of range");
  if (i == j) {
    if (!is_zero(v))
      throw std::invalid_argument("set_bracket: [e_i, e_i] must vanish");
    return;
  }
  const auto key = i < j ? std::pair{i, j} : std::pair{j, i};
  Vec stored = i < j ? v : Scalar(-1) * v;
  if (is_zero(stored))
    brackets_.erase(key);
  else
    brackets_[key] = std::move(stored);
}

Vec AlgebraData::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_)
    throw std::out_of_range("basis_bracket: index out of range");
  if (i == j)
    return zero_vec(dim_);
  const auto it = brackets_.find(i < j ? std::pair{i, j} : std::pair{j, i});
  if (it == brackets_.end())
    return zero_vec(dim_);
  return i < j ? it->second : Scalar(-1) * it->second;
}

Vec AlgebraData::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: vector length does not match algebra dimension");
  Vec r(dim_);
  for (const auto &[key, v] : brackets_) {
    const auto [i, j] = key;
    Scalar c;
    if (!x[i].is_zero() && !y[j].is_zero())
      c += x[i] * y[j];
    if (!x[j].is_zero() && !y[i].is_zero())
      c -= x[j] * y[i];
    if (c.is_zero())
      continue;
    for (std::size_t l = 0; l < dim_; ++l)
      if (!v[l].is_zero())
        r[l] += c * v[l];
  }
  return r;
}

Mat AlgebraData::ad(std::size_t i) const { return ad(unit_vec(dim_, i)); }

Mat AlgebraData::ad(std::span<const Scalar> x) const {
  if (x.size() != dim_)
    throw std::invalid_argument("ad: vector length does not match algebra dimension");
  Mat m(dim_, dim_);
  for (const auto &[key, v] : brackets_) {
    const auto [p, q] = key;
    for (std::size_t l = 0; l < dim_; ++l) {
      if (v[l].is_zero())
        continue;
      if (!x[p].is_zero())
        m(l, q) += x[p] * v[l];
      if (!x[q].is_zero())
        m(l, p) -= x[q] * v[l];
    }
  }
  return m;
}

AlgebraData direct_sum(const AlgebraData &a, const AlgebraData &b) {
  const std::size_t n = a.dim() + b.dim();
  AlgebraData s(n);
  for (const auto &[key, v] : a.brackets()) {
    Vec w(n);
    std::copy(v.begin(), v.end(), w.begin());
    s.set_bracket(key.first, key.second, w);
  }
  for (const auto &[key, v] : b.brackets()) {
    Vec w(n);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    s.set_bracket(a.dim() + key.first, a.dim() + key.second, w);
  }
  return s;
}

AlgebraData change_basis(const AlgebraData &a, const Mat &p) {
  const auto pinv = inverse(p);
  if (!pinv)
    throw std::invalid_argument("change_basis: singular basis matrix");
  const std::size_t n = a.dim();
  AlgebraData r(n);
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < n; ++c)
    cols.push_back(p.col_vec(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      r.set_bracket(i, j, *pinv * a.bracket(cols[i], cols[j]));
  return r;
}

std::vector<JacobiDefect> jacobi_defect(const AlgebraData &a) {
  const std::size_t n = a.dim();
  std::vector<Mat> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    ads.push_back(a.ad(i));
  std::vector<JacobiDefect> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = ads[i] * a.basis_bracket(j, k);
        s = s + ads[j] * a.basis_bracket(k, i);
        s = s + ads[k] * a.basis_bracket(i, j);
        if (!is_zero(s))
          out.push_back({{i, j, k}, std::move(s)});
      }
  return out;
}

bool is_lie(const AlgebraData &a) { return jacobi_defect(a).empty(); }

Subspace derived_algebra(const AlgebraData &a) {
  std::vector<Vec> vs;
  for (const auto &[key, v] : a.brackets())
    vs.push_back(v);
  return Subspace::span(a.dim(), vs);
}

Subspace bracket_of(const AlgebraData &a, const Subspace &s, const Subspace &t) {
  std::vector<Vec> vs;
  const auto sv = s.vectors();
  const auto tv = t.vectors();
  for (const auto &x : sv)
    for (const auto &y : tv)
      vs.push_back(a.bracket(x, y));
  return Subspace::span(a.dim(), vs);
}

Subspace bracket_with(const AlgebraData &a, const Subspace &s) {
  std::vector<Vec> vs;
  for (const auto &y : s.vectors())
    for (std::size_t i = 0; i < a.dim(); ++i)
      vs.push_back(a.ad(i) * y);
  return Subspace::span(a.dim(), vs);
}

std::vector<Subspace> lower_central_series(const AlgebraData &a) {
  if (const auto d = jacobi_defect(a); !d.empty())
    throw std::domain_error("lower_central_series: not a Lie algebra");
  std::vector<Subspace> series{Subspace::full(a.dim())};
  for (;;) {
    Subspace next = bracket_with(a, series.back());
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilindex(const AlgebraData &a) {
  const auto series = lower_central_series(a);
  if (!series.back().is_zero())
    return std::nullopt;
  return series.size() - 1;
}

Subspace bracket_preimage(const AlgebraData &a, const Subspace &s, const Subspace &t) {
  // [x, y] = -ad(y) x, so x qualifies iff alpha(ad(y) x) = 0 for every
  // y in S and every alpha annihilating T.
  const Subspace ann = t.annihilator();
  Mat rows(0, a.dim());
  for (const auto &y : s.vectors()) {
    const Mat ady = a.ad(y);
    if (ann.dim() > 0)
      rows = rows.stacked(ann.basis() * ady);
  }
  return kernel(rows);
}

Subspace centre(const AlgebraData &a) {
  return bracket_preimage(a, Subspace::full(a.dim()), Subspace::zero(a.dim()));
}

std::vector<Subspace> upper_central_series(const AlgebraData &a) {
  std::vector<Subspace> series{centre(a)};
  for (;;) {
    Subspace next = bracket_preimage(a, Subspace::full(a.dim()), series.back());
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_ideal(const AlgebraData &a, const Subspace &s) { return s.contains(bracket_with(a, s)); }

AlgebraType algebra_type(const AlgebraData &a) { return {derived_algebra(a).dim(), centre(a).dim()}; }

bool is_reduced(const AlgebraData &a) { return derived_algebra(a).contains(centre(a)); }

} // namespace quadlie
