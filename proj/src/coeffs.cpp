#include "quadlie/coeffs.hpp"

#include <stdexcept>
#include <utility>

namespace quadlie {

std::optional<std::pair<Triple, int>> sort_with_sign(std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k)
    return std::nullopt;
  Triple t{i, j, k};
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int p = 0; p < 2 - pass; ++p)
      if (t[p] > t[p + 1]) {
        std::swap(t[p], t[p + 1]);
        sign = -sign;
      }
  return std::pair{t, sign};
}

Scalar AlternatingCoeffs::get(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= n_ || j >= n_ || k >= n_)
    throw std::out_of_range("AlternatingCoeffs::get: index out of range");
  const auto s = sort_with_sign(i, j, k);
  if (!s)
    return Scalar();
  const auto it = terms_.find(s->first);
  if (it == terms_.end())
    return Scalar();
  return s->second > 0 ? it->second : -it->second;
}

void AlternatingCoeffs::set(std::size_t i, std::size_t j, std::size_t k, const Scalar &v) {
  if (i >= n_ || j >= n_ || k >= n_)
    throw std::out_of_range("AlternatingCoeffs::set: index out of range");
  const auto s = sort_with_sign(i, j, k);
  if (!s) {
    if (!v.is_zero())
      throw std::invalid_argument("AlternatingCoeffs::set: repeated index needs a zero value");
    return;
  }
  const Scalar stored = s->second > 0 ? v : -v;
  if (stored.is_zero())
    terms_.erase(s->first);
  else
    terms_[s->first] = stored;
}

void AlternatingCoeffs::add(std::size_t i, std::size_t j, std::size_t k, const Scalar &v) {
  set(i, j, k, get(i, j, k) + v);
}

std::size_t free_parameter_count(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      count += n - j - 1;
  return count;
}

} // namespace quadlie
