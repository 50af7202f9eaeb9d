#include "quadlie/trivector.hpp"

#include "quadlie/tstar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace quadlie {

Mat contract(const Trivector &t, std::span<const Scalar> x) {
  const std::size_t n = t.n();
  if (x.size() != n)
    throw std::invalid_argument("contract: vector length does not match trivector");
  Mat out(n, n);
  for (const auto &[key, v] : t.terms()) {
    const auto [i, j, k] = key;
    // x_i e_j^e_k - x_j e_i^e_k + x_k e_i^e_j, written as skew entries.
    const auto put = [&](std::size_t a, std::size_t b, const Scalar &s) {
      if (s.is_zero())
        return;
      out(a, b) += s;
      out(b, a) -= s;
    };
    put(j, k, x[i] * v);
    put(i, k, -(x[j] * v));
    put(i, j, x[k] * v);
  }
  return out;
}

Subspace trivector_kernel(const Trivector &t) {
  const std::size_t n = t.n();
  if (n == 0)
    return Subspace::zero(0);
  // Row (j, k) holds the linear functional x -> t(x, e_j, e_k).
  Mat m(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat c = contract(t, unit_vec(n, i));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        m(j * n + k, i) = c(j, k);
  }
  return kernel(m);
}

std::size_t trivector_rank(const Trivector &t) { return t.n() - trivector_kernel(t).dim(); }

QuadraticStructure algebra_from_trivector(const Trivector &t) {
  if (t.n() < 3)
    throw ValidationError("algebra_from_trivector: need n >= 3");
  if (t.is_zero())
    throw ValidationError("algebra_from_trivector: zero trivector");
  return tstar_extend(delta_inv(t));
}

namespace {

Scalar det3(const Mat &m, const Triple &rows, const Triple &cols) {
  const auto e = [&](std::size_t r, std::size_t c) -> const Scalar & { return m(rows[r], cols[c]); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

// t(m e_a, m e_b, m e_c) for sorted a<b<c.
Scalar pulled(const Trivector &t, const Mat &m, const Triple &abc) {
  Scalar s;
  for (const auto &[ijk, v] : t.terms())
    s += v * det3(m, ijk, abc);
  return s;
}

} // namespace

Trivector gl_act(const Mat &sigma, const Trivector &t) {
  const std::size_t n = t.n();
  if (sigma.rows() != n || sigma.cols() != n)
    throw std::invalid_argument("gl_act: sigma has wrong size");
  const auto tau = inverse(sigma);
  if (!tau)
    throw std::invalid_argument("gl_act: sigma is singular");
  Trivector out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        out.set(a, b, c, pulled(t, *tau, {a, b, c}));
  return out;
}

std::variant<Mat, GlViolation> isometry_from_gl(const Mat &sigma, const Trivector &t1, const Trivector &t2) {
  const std::size_t n = t1.n();
  if (t2.n() != n || sigma.rows() != n || sigma.cols() != n)
    throw std::invalid_argument("isometry_from_gl: size mismatch");
  const auto inv = inverse(sigma);
  if (!inv)
    throw std::invalid_argument("isometry_from_gl: sigma is singular");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Scalar lhs = t1.get(i, j, k);
        const Scalar rhs = pulled(t2, sigma, {i, j, k});
        if (lhs != rhs)
          return GlViolation{{i, j, k}, lhs, rhs};
      }
  Mat m(2 * n, 2 * n);
  const Mat inv_t = inv->transpose();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = sigma(r, c);
      m(n + r, n + c) = inv_t(r, c);
    }
  const QuadraticStructure q1 = tstar_extend(delta_inv(t1));
  const QuadraticStructure q2 = tstar_extend(delta_inv(t2));
  if (!is_isometric_isomorphism(q1, q2, m))
    throw std::logic_error("isometry_from_gl: block map fails verification");
  return m;
}

namespace {

std::size_t parse_index(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw std::invalid_argument("trivector: bad index '" + std::string(s) + "'");
  const std::size_t v = std::stoul(std::string(s));
  if (v == 0)
    throw std::invalid_argument("trivector: indices start at 1");
  return v;
}

} // namespace

Trivector parse_trivector(std::string_view text, std::size_t n) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(ch);
  if (s.empty())
    throw std::invalid_argument("trivector: empty input");
  struct Term {
    Scalar coeff;
    Triple idx;
  };
  std::vector<Term> terms;
  std::size_t pos = 0;
  std::size_t max_index = 0;
  if (s == "0")
    return Trivector(n);
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("trivector: expected '+' or '-' at position " + std::to_string(pos + 1));
    }
    std::size_t end = pos;
    int depth = 0;
    while (end < s.size() && (depth > 0 || (s[end] != '+' && s[end] != '-'))) {
      if (s[end] == '[')
        ++depth;
      else if (s[end] == ']')
        --depth;
      ++end;
    }
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty())
      throw std::invalid_argument("trivector: empty term at position " + std::to_string(pos + 1));
    Scalar coeff(sign);
    if (const auto star = term.find('*'); star != std::string_view::npos) {
      coeff *= Scalar::parse(term.substr(0, star));
      term = term.substr(star + 1);
    }
    Triple idx{};
    if (!term.empty() && term.front() == '[') {
      if (term.back() != ']')
        throw std::invalid_argument("trivector: unterminated '[' in '" + std::string(term) + "'");
      const std::string_view body = term.substr(1, term.size() - 2);
      std::vector<std::size_t> parts;
      std::size_t start = 0;
      for (;;) {
        const auto comma = body.find(',', start);
        parts.push_back(parse_index(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start)));
        if (comma == std::string_view::npos)
          break;
        start = comma + 1;
      }
      if (parts.size() != 3)
        throw std::invalid_argument("trivector: need three indices in '" + std::string(term) + "'");
      idx = {parts[0], parts[1], parts[2]};
    } else {
      if (term.size() != 3)
        throw std::invalid_argument("trivector: expected three digits in '" + std::string(term) + "'");
      for (std::size_t p = 0; p < 3; ++p)
        idx[p] = parse_index(term.substr(p, 1));
    }
    for (auto &v : idx) {
      max_index = std::max(max_index, v);
      --v;
    }
    if (!sort_with_sign(idx[0], idx[1], idx[2]))
      throw std::invalid_argument("trivector: repeated index in '" + std::string(term) + "'");
    terms.push_back({coeff, idx});
    pos = end;
  }
  if (n == 0)
    n = max_index;
  if (max_index > n)
    throw std::invalid_argument("trivector: index " + std::to_string(max_index) + " exceeds n = " + std::to_string(n));
  Trivector t(n);
  for (const auto &term : terms)
    t.add(term.idx[0], term.idx[1], term.idx[2], term.coeff);
  return t;
}

std::string format_trivector(const Trivector &t) {
  if (t.is_zero())
    return "0";
  const bool compact = t.n() <= 9;
  std::ostringstream os;
  bool first = true;
  for (const auto &[idx, v] : t.terms()) {
    Scalar mag = v;
    if (v.sign() < 0) {
      os << "-";
      mag = -v;
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (mag != Scalar(1))
      os << mag << "*";
    if (compact)
      os << idx[0] + 1 << idx[1] + 1 << idx[2] + 1;
    else
      os << "[" << idx[0] + 1 << "," << idx[1] + 1 << "," << idx[2] + 1 << "]";
  }
  return os.str();
}

} // namespace quadlie
