#include "quadlie/convert.hpp"

#include <optional>
#include <stdexcept>

namespace quadlie {

CocycleCoeffs family_to_coeffs(const QuadraticFamily &f) {
  if (const auto v = validate_family(f); !v.empty())
    throw std::invalid_argument("family_to_coeffs: " + v.front().message);
  const std::size_t n = f.n;
  CocycleCoeffs c(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r)
        c.set(p, q, r, f.mats[p](r, q));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (f.mats[i](k, j) != c.get(i, j, k))
          throw std::invalid_argument("family_to_coeffs: entry (" + std::to_string(k + 1) + "," + std::to_string(j + 1) +
                                      ") of M_" + std::to_string(i + 1) + " breaks the alternating symmetry");
  return c;
}

QuadraticFamily coeffs_to_family(const CocycleCoeffs &c) {
  const std::size_t n = c.n();
  QuadraticFamily f{n, std::vector<Mat>(n, Mat(n, n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        f.mats[i](k, j) = c.get(i, j, k);
  return f;
}

CocycleCoeffs chain_to_coeffs(const ExtensionChain &ch) { return CocycleCoeffs(chain_products(ch)); }

CocycleCoeffs algebra_to_coeffs(const QuadraticStructure &q) {
  if (q.dim() % 2 != 0)
    throw std::invalid_argument("algebra_to_coeffs: odd dimension");
  const std::size_t n = q.dim() / 2;
  if (q.form() != hyperbolic_form(n))
    throw std::invalid_argument("algebra_to_coeffs: form is not the hyperbolic pairing e_i <-> e_i*");
  for (const auto &[key, v] : q.alg().brackets()) {
    if (key.second >= n)
      throw std::invalid_argument("algebra_to_coeffs: some e_i* is not central");
    for (std::size_t l = 0; l < n; ++l)
      if (!v[l].is_zero())
        throw std::invalid_argument("algebra_to_coeffs: some [e_i, e_j] leaves span{e*}");
  }
  CocycleCoeffs c(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q2 = p + 1; q2 < n; ++q2)
      for (std::size_t r = q2 + 1; r < n; ++r)
        c.set(p, q2, r, q.alg().basis_bracket(p, q2)[n + r]);
  return c;
}

namespace {

std::string compare(const QuadraticStructure &a, const QuadraticStructure &b, const std::string &what) {
  if (a.alg() != b.alg())
    return what + ": structure constants differ";
  if (a.form() != b.form())
    return what + ": forms differ";
  return {};
}

} // namespace

RoadsReport all_roads(const CocycleCoeffs &c, bool include_fold) {
  RoadsReport r;
  if (c.n() < 3 || c.is_zero()) {
    r.mismatches.push_back("all_roads needs n >= 3 and nonzero coefficients");
    return r;
  }
  std::optional<QuadraticStructure> t, ch, fam;
  const auto attempt = [&](std::optional<QuadraticStructure> &slot, const std::string &name, auto &&build) {
    try {
      slot.emplace(build());
    } catch (const std::exception &e) {
      r.mismatches.push_back(name + " route failed: " + e.what());
    }
  };
  const ExtensionChain chain = coeffs_to_chain(c);
  attempt(t, "T*", [&] { return tstar_extend(c); });
  attempt(ch, "chain", [&] { return chain_to_algebra(chain); });
  attempt(fam, "family", [&] { return algebra_from_family(coeffs_to_family(c)); });
  const auto check = [&](const std::optional<QuadraticStructure> &a, const std::optional<QuadraticStructure> &b,
                         const std::string &what, bool &flag) {
    if (!a || !b)
      return;
    const std::string m = compare(*a, *b, what);
    flag = m.empty();
    if (!flag)
      r.mismatches.push_back(m);
  };
  check(t, ch, "T* vs chain", r.tstar_vs_chain);
  check(t, fam, "T* vs family", r.tstar_vs_family);
  check(ch, fam, "chain vs family", r.chain_vs_family);
  if (include_fold) {
    std::optional<QuadraticStructure> folded;
    attempt(folded, "chain fold", [&] { return chain_algebras(chain).back(); });
    check(folded, ch, "chain fold vs closed formula", r.chain_fold);
  } else {
    r.chain_fold = true;
  }
  if (chain_to_coeffs(chain) != c)
    r.mismatches.push_back("chain coefficients do not round-trip");
  return r;
}

std::size_t parameter_count(std::size_t n) { return free_parameter_count(n); }

} // namespace quadlie
