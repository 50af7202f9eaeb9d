#pragma once

#include "quadlie/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace quadlie {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vec operator+(const Vec &a, const Vec &b);
Vec operator-(const Vec &a, const Vec &b);
Vec operator*(const Scalar &s, const Vec &v);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
std::string to_string(const Vec &v);

/// Dense row-major matrix of exact scalars.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  /// Rows given as nested lists; all rows must have equal length.
  static Mat from_rows(const std::vector<Vec> &rows, std::size_t cols = 0);
  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar &operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const;
  Vec col_vec(std::size_t c) const;
  void set_row(std::size_t r, std::span<const Scalar> v);
  void set_col(std::size_t c, std::span<const Scalar> v);

  Mat transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  /// Appends the rows of `other` (same column count).
  Mat stacked(const Mat &other) const;
  /// Sub-block copy.
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend bool operator==(const Mat &, const Mat &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

Mat operator*(const Mat &a, const Mat &b);
Vec operator*(const Mat &a, std::span<const Scalar> x);
Mat operator+(const Mat &a, const Mat &b);
Mat operator-(const Mat &a, const Mat &b);
Mat operator*(const Scalar &s, const Mat &a);
std::string to_string(const Mat &m);

struct RrefResult {
  Mat form;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot row for
/// each column is the first row (from the current one down) with a nonzero
/// entry, so the output is deterministic.
RrefResult rref(const Mat &m);
std::size_t rank(const Mat &m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat &m);
/// Some solution x of m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat &m, std::span<const Scalar> b);

/// A linear subspace of K^n, stored as the nonzero rows of an RREF basis.
/// Two subspaces are equal exactly when their stored bases are identical.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t ambient, const std::vector<Vec> &vectors);
  /// Row space of `m`.
  static Subspace row_space(const Mat &m);
  /// Column space of `m`.
  static Subspace col_space(const Mat &m) { return row_space(m.transpose()); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Mat &basis() const { return basis_; }
  std::vector<Vec> vectors() const;
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace &other) const;

  Subspace operator+(const Subspace &other) const;
  Subspace intersect(const Subspace &other) const;
  /// {x : <x, s> = 0 for all s} under the standard dot product.
  Subspace annihilator() const;

  /// Embeds into a larger ambient space, coordinate i going to offset + i.
  Subspace embed(std::size_t new_ambient, std::size_t offset) const;

  friend bool operator==(const Subspace &, const Subspace &) = default;

private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : m x = 0}.
Subspace kernel(const Mat &m);

std::string to_string(const Subspace &s);

} // namespace quadlie
