#include "quadlie/tstar.hpp"

#include <sstream>
#include <stdexcept>

namespace quadlie {

namespace {

std::string triple_text(const std::array<std::size_t, 3> &t) {
  std::ostringstream os;
  os << "(" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << ")";
  return os.str();
}

// w(x, e_c) for a vector x in B.
Vec w_left(const GeneralCocycle &w, const Vec &x, std::size_t c) {
  Vec out = zero_vec(w.dim());
  for (std::size_t l = 0; l < x.size(); ++l)
    if (!x[l].is_zero())
      out = out + x[l] * w.value(l, c);
  return out;
}

// ad*(e_a)(alpha) = -alpha o ad e_a.
Vec coadjoint(const AlgebraData &b, std::size_t a, const Vec &alpha) {
  const std::size_t n = b.dim();
  Vec out(n);
  for (std::size_t l = 0; l < n; ++l)
    out[l] = -dot(alpha, b.basis_bracket(a, l));
  return out;
}

// Sum_cyc w([a,b],c) - Sum_cyc ad*(a) w(b,c) on basis vectors.
Vec cocycle_defect(const GeneralCocycle &w, std::size_t i, std::size_t j, std::size_t k) {
  const AlgebraData &b = w.base();
  Vec lhs = w_left(w, b.basis_bracket(i, j), k);
  lhs = lhs + w_left(w, b.basis_bracket(j, k), i);
  lhs = lhs + w_left(w, b.basis_bracket(k, i), j);
  Vec rhs = coadjoint(b, i, w.value(j, k));
  rhs = rhs + coadjoint(b, j, w.value(k, i));
  rhs = rhs + coadjoint(b, k, w.value(i, j));
  return lhs - rhs;
}

} // namespace

GeneralCocycle GeneralCocycle::from_coeffs(const CocycleCoeffs &c) {
  const std::size_t n = c.n();
  GeneralCocycle w(AlgebraData::abelian(n));
  for (const auto &[t, v] : c.terms()) {
    // The sorted triple (p,q,r) feeds w(e_p,e_q), w(e_p,e_r) and w(e_q,e_r).
    const auto [p, q, r] = t;
    const auto add = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar &s) {
      Vec cur = w.value(i, j);
      cur[k] += s;
      w.set(i, j, cur);
    };
    add(p, q, r, v);
    add(p, r, q, -v);
    add(q, r, p, v);
  }
  return w;
}

void GeneralCocycle::set(std::size_t i, std::size_t j, const Vec &v) {
  const std::size_t n = base_.dim();
  if (i >= n || j >= n || v.size() != n)
    throw std::invalid_argument("GeneralCocycle::set: index or length out of range");
  if (i == j) {
    if (!is_zero(v))
      throw std::invalid_argument("GeneralCocycle::set: w(e_i, e_i) must vanish");
    return;
  }
  const auto key = i < j ? std::pair{i, j} : std::pair{j, i};
  Vec stored = i < j ? v : Scalar(-1) * v;
  if (is_zero(stored))
    values_.erase(key);
  else
    values_[key] = std::move(stored);
}

Vec GeneralCocycle::value(std::size_t i, std::size_t j) const {
  const std::size_t n = base_.dim();
  if (i >= n || j >= n)
    throw std::out_of_range("GeneralCocycle::value: index out of range");
  if (i == j)
    return zero_vec(n);
  const auto it = values_.find(i < j ? std::pair{i, j} : std::pair{j, i});
  if (it == values_.end())
    return zero_vec(n);
  return i < j ? it->second : Scalar(-1) * it->second;
}

std::optional<std::array<std::size_t, 3>> cyclic_violation(const GeneralCocycle &w) {
  const std::size_t n = w.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar a = w.eval(i, j, k);
        if (a != w.eval(k, i, j) || a != w.eval(j, k, i))
          return std::array{i, j, k};
      }
  return std::nullopt;
}

bool is_cyclic(const GeneralCocycle &w) { return !cyclic_violation(w); }

std::optional<std::array<std::size_t, 3>> cocycle_violation(const GeneralCocycle &w) {
  if (!is_lie(w.base()))
    throw std::domain_error("cocycle check: base is not a Lie algebra");
  const std::size_t n = w.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!is_zero(cocycle_defect(w, i, j, k)))
          return std::array{i, j, k};
  return std::nullopt;
}

bool is_two_cocycle(const GeneralCocycle &w) { return !cocycle_violation(w); }

AlgebraData tstar_product(const GeneralCocycle &w) {
  const AlgebraData &b = w.base();
  const std::size_t n = b.dim();
  AlgebraData out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = zero_vec(2 * n);
      const Vec bij = b.basis_bracket(i, j);
      const Vec wij = w.value(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        v[l] = bij[l];
        v[n + l] = wij[l];
      }
      out.set_bracket(i, j, v);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Vec c = coadjoint(b, i, unit_vec(n, j));
      Vec v = zero_vec(2 * n);
      for (std::size_t l = 0; l < n; ++l)
        v[n + l] = c[l];
      out.set_bracket(i, n + j, v);
    }
  }
  return out;
}

QuadraticStructure tstar_extend(const GeneralCocycle &w) {
  if (const auto j = jacobi_defect(w.base()); !j.empty())
    throw ValidationError("tstar_extend: base is not a Lie algebra, Jacobi fails on " + triple_text(j.front().triple));
  if (const auto t = cyclic_violation(w))
    throw ValidationError("tstar_extend: w is not cyclic on " + triple_text(*t));
  if (const auto t = cocycle_violation(w))
    throw ValidationError("tstar_extend: w is not a 2-cocycle on " + triple_text(*t));
  return QuadraticStructure(tstar_product(w), hyperbolic_form(w.dim()));
}

QuadraticStructure tstar_extend(const CocycleCoeffs &c) { return tstar_extend(GeneralCocycle::from_coeffs(c)); }

Subspace radical(const GeneralCocycle &w) {
  const std::size_t n = w.dim();
  if (n == 0)
    return Subspace::zero(0);
  Mat m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec v = w.value(i, j);
      for (std::size_t k = 0; k < n; ++k)
        m(j * n + k, i) = v[k];
    }
  return kernel(m);
}

ReducedCriteria reduced_criteria(const GeneralCocycle &w) {
  if (!w.base().is_abelian())
    throw std::invalid_argument("reduced_criteria: base must be abelian");
  const std::size_t n = w.dim();
  ReducedCriteria r{};
  r.reduced = is_reduced(tstar_extend(w).alg());
  r.nondegenerate = radical(w).is_zero();
  std::vector<Vec> images;
  for (const auto &[key, v] : w.values())
    images.push_back(v);
  r.span_full = Subspace::span(n, images).is_full();
  return r;
}

TstarDecomposition decompose_as_tstar(const QuadraticStructure &q, const Subspace &ideal) {
  const std::size_t dim = q.dim();
  if (dim % 2 != 0)
    throw ValidationError("decompose_as_tstar: dimension is odd");
  if (ideal.ambient_dim() != dim)
    throw ValidationError("decompose_as_tstar: subspace lives in the wrong space");
  if (!is_lagrangian(q, ideal))
    throw ValidationError("decompose_as_tstar: subspace is not lagrangian");
  if (!is_ideal(q.alg(), ideal))
    throw ValidationError("decompose_as_tstar: subspace is not an ideal");
  if (!bracket_of(q.alg(), ideal, ideal).is_zero())
    throw ValidationError("decompose_as_tstar: ideal is not abelian");

  const std::size_t n = dim / 2;
  const Mat &f = q.form();
  const Mat s = ideal.basis();
  const Mat c = hyperbolic_dual_basis(f, ideal);
  std::vector<Vec> sv(n), cv(n);
  for (std::size_t e = 0; e < n; ++e) {
    sv[e] = s.row_vec(e);
    cv[e] = c.row_vec(e);
  }

  // x = sum_e phi(x, c_e) s_e + sum_e phi(x, s_e) c_e.
  AlgebraData base(n);
  GeneralCocycle w;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vec>> wvals;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vec x = q.alg().bracket(cv[a], cv[b]);
      Vec bpart(n), wpart(n);
      for (std::size_t e = 0; e < n; ++e) {
        bpart[e] = q.pairing(x, sv[e]);
        wpart[e] = q.pairing(x, cv[e]);
      }
      base.set_bracket(a, b, bpart);
      wvals.push_back({{a, b}, wpart});
    }
  w = GeneralCocycle(base);
  for (const auto &[key, v] : wvals)
    w.set(key.first, key.second, v);

  Mat iso(dim, dim);
  for (std::size_t e = 0; e < n; ++e) {
    iso.set_row(e, f * sv[e]);
    iso.set_row(n + e, f * cv[e]);
  }
  const QuadraticStructure t = tstar_extend(w);
  if (!is_isometric_isomorphism(q, t, iso))
    throw std::logic_error("decompose_as_tstar: recovered map is not an isometric isomorphism");
  return {std::move(base), std::move(w), std::move(iso)};
}

std::optional<Subspace> find_lagrangian_ideal(const QuadraticStructure &q) {
  const std::size_t dim = q.dim();
  if (dim % 2 != 0)
    return std::nullopt;
  const Subspace sq = derived_algebra(q.alg());
  if (sq == centre(q.alg()) && is_lagrangian(q, sq))
    return sq;
  if (!q.alg().is_abelian())
    return std::nullopt;
  // Every isotropic subspace of an abelian algebra is an abelian ideal.
  std::vector<Vec> candidates;
  for (std::size_t i = dim; i-- > 0;)
    candidates.push_back(unit_vec(dim, i));
  for (std::size_t i = dim; i-- > 0;)
    for (std::size_t j = i; j-- > 0;) {
      candidates.push_back(unit_vec(dim, i) + unit_vec(dim, j));
      candidates.push_back(unit_vec(dim, i) - unit_vec(dim, j));
    }
  Subspace s = Subspace::zero(dim);
  for (const auto &v : candidates) {
    if (s.dim() == dim / 2)
      break;
    if (s.contains(v))
      continue;
    const Subspace t = s + Subspace::span(dim, {v});
    if (is_isotropic(q.form(), t))
      s = t;
  }
  if (s.dim() == dim / 2)
    return s;
  return std::nullopt;
}

std::vector<GeneralCocycle> cyclic_cocycle_space(const AlgebraData &b) {
  const std::size_t n = b.dim();
  if (!is_lie(b))
    throw std::domain_error("cyclic_cocycle_space: base is not a Lie algebra");
  // Cyclic plus skew means alternating, so parametrize by sorted triples and
  // impose the cocycle identity as a linear system.
  std::vector<Triple> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        triples.push_back({i, j, k});
  if (triples.empty())
    return {};
  const auto basis_cocycle = [&](const Vec &coords) {
    CocycleCoeffs c(n);
    for (std::size_t p = 0; p < triples.size(); ++p)
      c.set(triples[p][0], triples[p][1], triples[p][2], coords[p]);
    GeneralCocycle w(b);
    const GeneralCocycle flat = GeneralCocycle::from_coeffs(c);
    for (const auto &[key, v] : flat.values())
      w.set(key.first, key.second, v);
    return w;
  };
  std::vector<Vec> columns;
  for (std::size_t p = 0; p < triples.size(); ++p) {
    const GeneralCocycle w = basis_cocycle(unit_vec(triples.size(), p));
    Vec col;
    for (const auto &t : triples) {
      const Vec d = cocycle_defect(w, t[0], t[1], t[2]);
      col.insert(col.end(), d.begin(), d.end());
    }
    columns.push_back(std::move(col));
  }
  const Mat constraints = Mat::from_rows(columns).transpose();
  std::vector<GeneralCocycle> out;
  for (const auto &v : kernel(constraints).vectors())
    out.push_back(basis_cocycle(v));
  return out;
}

QuadraticStructure inflate(const AlgebraData &b, const Mat &f) {
  const std::size_t n = b.dim();
  if (f.rows() != n || f.cols() != n)
    throw ValidationError("inflate: form has wrong size");
  Mat g = hyperbolic_form(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = f(i, j);
  return QuadraticStructure(tstar_product(GeneralCocycle(b)), g);
}

} // namespace quadlie
