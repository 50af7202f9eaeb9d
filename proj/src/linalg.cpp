#include "quadlie/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace quadlie {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

Vec operator+(const Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

Vec operator-(const Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar &s, const Vec &v) {
  Vec r(v);
  for (auto &x : r)
    x *= s;
  return r;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero())
      s += a[i] * b[i];
  return s;
}

std::string to_string(const Vec &v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

Mat Mat::from_rows(const std::vector<Vec> &rows, std::size_t cols) {
  if (!rows.empty())
    cols = rows.front().size();
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged matrix rows");
    m.set_row(r, rows[r]);
  }
  return m;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Vec Mat::row_vec(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec Mat::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

void Mat::set_row(std::size_t r, std::span<const Scalar> v) {
  if (v.size() != cols_)
    throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) = v[c];
}

void Mat::set_col(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_)
    throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = v[r];
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  for (const auto &x : a_)
    if (!x.is_zero())
      return false;
  return true;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r))
        return false;
  return true;
}

bool Mat::is_skew() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r))
        return false;
  return true;
}

Mat Mat::stacked(const Mat &other) const {
  if (rows_ == 0)
    return other;
  if (other.rows_ == 0)
    return *this;
  if (other.cols_ != cols_)
    throw std::invalid_argument("stacked: column mismatch");
  Mat m(rows_ + other.rows_, cols_);
  std::copy(a_.begin(), a_.end(), m.a_.begin());
  std::copy(other.a_.begin(), other.a_.end(), m.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
  return m;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw std::out_of_range("block out of range");
  Mat b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

Mat operator*(const Mat &a, const Mat &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: shape mismatch");
  Mat p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar &x = a(i, k);
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero())
          p(i, j) += x * b(k, j);
    }
  return p;
}

Vec operator*(const Mat &a, std::span<const Scalar> x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    y[i] = dot(a.row(i), x);
  return y;
}

Mat operator+(const Mat &a, const Mat &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: shape mismatch");
  Mat s(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s(i, j) += b(i, j);
  return s;
}

Mat operator-(const Mat &a, const Mat &b) { return a + Scalar(-1) * b; }

Mat operator*(const Scalar &s, const Mat &a) {
  Mat r(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) *= s;
  return r;
}

std::string to_string(const Mat &m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r)
    os << (r ? ", " : "") << to_string(m.row_vec(r));
  os << ']';
  return os.str();
}

RrefResult rref(const Mat &m) {
  Mat a(m);
  std::vector<std::size_t> pivots;
  std::size_t cur = 0;
  for (std::size_t c = 0; c < a.cols() && cur < a.rows(); ++c) {
    std::size_t p = cur;
    while (p < a.rows() && a(p, c).is_zero())
      ++p;
    if (p == a.rows())
      continue;
    if (p != cur)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a(p, j), a(cur, j));
    const Scalar inv = a(cur, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!a(cur, j).is_zero())
        a(cur, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == cur || a(r, c).is_zero())
        continue;
      const Scalar f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(cur, j).is_zero())
          a(r, j) -= f * a(cur, j);
    }
    pivots.push_back(c);
    ++cur;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat &m) { return rref(m).pivots.size(); }

std::optional<Mat> inverse(const Mat &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, piv] = rref(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1))
    return std::nullopt;
  return r.block(0, n, n, n);
}

std::optional<Vec> solve(const Mat &m, std::span<const Scalar> b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: right-hand side length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [r, piv] = rref(aug);
  if (!piv.empty() && piv.back() == m.cols())
    return std::nullopt;
  Vec x(m.cols());
  for (std::size_t k = 0; k < piv.size(); ++k)
    x[piv[k]] = r(k, m.cols());
  return x;
}

Subspace Subspace::full(std::size_t n) { return row_space(Mat::identity(n)); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec> &vectors) {
  Mat m(vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    m.set_row(r, vectors[r]);
  return row_space(m);
}

Subspace Subspace::row_space(const Mat &m) {
  auto [r, piv] = rref(m);
  Subspace s(m.cols());
  s.basis_ = r.block(0, 0, piv.size(), m.cols());
  s.pivots_ = std::move(piv);
  return s;
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> v;
  for (std::size_t r = 0; r < basis_.rows(); ++r)
    v.push_back(basis_.row_vec(r));
  return v;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("Subspace::contains: dimension mismatch");
  // Reduce v against the RREF basis; v is inside iff the residue vanishes.
  Vec w(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Scalar f = w[pivots_[k]];
    if (f.is_zero())
      continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_(k, j).is_zero())
        w[j] -= f * basis_(k, j);
  }
  return quadlie::is_zero(w);
}

bool Subspace::contains(const Subspace &other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace::contains: dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r)))
      return false;
  return true;
}

Subspace Subspace::operator+(const Subspace &other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace sum: dimension mismatch");
  return row_space(basis_.stacked(other.basis_));
}

Subspace Subspace::annihilator() const {
  if (dim() == 0)
    return full(ambient_);
  return kernel(basis_);
}

Subspace Subspace::intersect(const Subspace &other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace intersection: dimension mismatch");
  const Mat constraints = annihilator().basis().stacked(other.annihilator().basis());
  if (constraints.rows() == 0)
    return full(ambient_);
  return kernel(constraints);
}

Subspace Subspace::embed(std::size_t new_ambient, std::size_t offset) const {
  if (offset + ambient_ > new_ambient)
    throw std::invalid_argument("Subspace::embed: does not fit");
  Mat m(dim(), new_ambient);
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c)
      m(r, offset + c) = basis_(r, c);
  return row_space(m);
}

Subspace kernel(const Mat &m) {
  auto [r, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv)
    is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k)
      v[piv[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

std::string to_string(const Subspace &s) {
  std::ostringstream os;
  os << "span" << to_string(s.basis()) << " in K^" << s.ambient_dim();
  return os.str();
}

} // namespace quadlie
