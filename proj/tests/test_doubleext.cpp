#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "quadlie/catalog.hpp"
#include "quadlie/doubleext.hpp"
#include "quadlie/trivector.hpp"
#include "quadlie/tstar.hpp"

using namespace quadlie;

namespace {

Vec e(std::size_t n, std::size_t i) { return unit_vec(n, i); }

QuadraticStructure hyperbolic_abelian(std::size_t n) { return {AlgebraData::abelian(2 * n), hyperbolic_form(n)}; }

/// Random combination of the skew-derivation basis of q.
Mat random_skew_derivation(oracle::Gen &g, const QuadraticStructure &q) {
  Mat d(q.dim(), q.dim());
  for (const auto &b : skew_derivations(q))
    if (g.coin(60))
      d = d + Scalar(g.range(-2, 2)) * b;
  return d;
}

/// On the hyperbolic abelian algebra: e_j* -> sum_i s_ij e_i with s skew, so d^2 = 0.
Mat square_zero_derivation(oracle::Gen &g, std::size_t n) {
  Mat d(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar s(g.range(-2, 2));
      d(i, n + j) = s;
      d(j, n + i) = -s;
    }
  return d;
}

std::vector<QuadraticStructure> base_algebras() {
  return {
      hyperbolic_abelian(2),
      hyperbolic_abelian(3),
      tstar_extend(GeneralCocycle(AlgebraData::heisenberg())),
      algebra_from_trivector(parse_trivector("123")),
      QuadraticStructure(AlgebraData::abelian(4), oracle::jordan_form(2)),
  };
}

/// The generic Dijk, filled with distinct values so that misplaced entries show.
CocycleCoeffs generic_coeffs(std::size_t n) {
  CocycleCoeffs c(n);
  long v = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        c.set(i, j, k, Scalar(v++));
  return c;
}

} // namespace

TEST_CASE("skew derivations are validated") {
  const QuadraticStructure q = hyperbolic_abelian(2);
  Mat bad(4, 4);
  bad(0, 0) = 1; // phi(d e1, e1*) + phi(e1, d e1*) = 1
  CHECK_FALSE(is_form_skew(q.form(), bad));
  CHECK_THROWS_AS(SkewDerivation(q, bad), ValidationError);
  CHECK_THROWS_AS(SkewDerivation(q, Mat::identity(3)), ValidationError);

  const QuadraticStructure l = algebra_from_trivector(parse_trivector("123"));
  CHECK_FALSE(is_derivation(l.alg(), Mat::identity(6)));
  CHECK(is_derivation(l.alg(), l.alg().ad(e(6, 0))));
}

TEST_CASE("skew_derivations spans exactly the skew derivations") {
  for (const auto &q : base_algebras()) {
    const auto basis = skew_derivations(q);
    for (const auto &d : basis) {
      CHECK(is_derivation(q.alg(), d));
      CHECK(is_form_skew(q.form(), d));
    }
    // Inner derivations ad x are always skew for an invariant form.
    for (std::size_t i = 0; i < q.dim(); ++i) {
      const Mat ad = q.alg().ad(e(q.dim(), i));
      std::vector<Vec> rows;
      for (const auto &d : basis) {
        Vec flat;
        for (std::size_t r = 0; r < q.dim(); ++r)
          for (std::size_t c = 0; c < q.dim(); ++c)
            flat.push_back(d(r, c));
        rows.push_back(flat);
      }
      Vec target;
      for (std::size_t r = 0; r < q.dim(); ++r)
        for (std::size_t c = 0; c < q.dim(); ++c)
          target.push_back(ad(r, c));
      CHECK(Subspace::span(q.dim() * q.dim(), rows).contains(target));
    }
  }
  // Abelian hyperbolic of dim 2n: skew maps for the form, so(n, n), of dim n(2n-1).
  CHECK(skew_derivations(hyperbolic_abelian(2)).size() == 6);
  CHECK(skew_derivations(hyperbolic_abelian(3)).size() == 15);
}

TEST_CASE("double extension by the zero algebra returns the input") {
  const QuadraticStructure q = algebra_from_trivector(parse_trivector("123"));
  CHECK(double_extend(q, AlgebraData(0), {}) == q);
}

TEST_CASE("Jordan-block double extension is n-step nilpotent of dimension 2n + 2") {
  for (long n = 2; n <= 5; ++n) {
    const QuadraticStructure a(AlgebraData::abelian(static_cast<std::size_t>(2 * n)), oracle::jordan_form(n));
    const QuadraticStructure ext = double_extend(a, AlgebraData(1), {oracle::jordan_derivation(n)});
    CHECK(ext.dim() == static_cast<std::size_t>(2 * n + 2));
    CHECK(nilindex(ext.alg()) == static_cast<std::size_t>(n));
    CHECK(oracle::nilindex(oracle::tensor_of(ext.alg())) == n);
    CHECK(oracle::invariant(oracle::tensor_of(ext.alg()), oracle::to_dense(ext.form())));
  }
}

TEST_CASE("double extension of the zero algebra by the Heisenberg algebra") {
  const QuadraticStructure zero(AlgebraData(0), Mat(0, 0));
  const QuadraticStructure ext = double_extend(zero, AlgebraData::heisenberg(), {Mat(0, 0), Mat(0, 0), Mat(0, 0)});
  CHECK(ext.dim() == 6);
  CHECK(nilindex(ext.alg()) == 2);
  CHECK(oracle::jacobi(oracle::tensor_of(ext.alg())));
  // Same algebra as the split extension of h by its coadjoint module.
  CHECK(ext == tstar_extend(GeneralCocycle(AlgebraData::heisenberg())));
}

TEST_CASE("double extension rejects bad data") {
  const QuadraticStructure q = hyperbolic_abelian(2);
  // Two non-commuting skew maps cannot represent an abelian B.
  const auto basis = skew_derivations(q);
  Mat x, y;
  bool found = false;
  for (std::size_t i = 0; i < basis.size() && !found; ++i)
    for (std::size_t j = 0; j < basis.size() && !found; ++j)
      if (!(basis[i] * basis[j] - basis[j] * basis[i]).is_zero()) {
        x = basis[i];
        y = basis[j];
        found = true;
      }
  REQUIRE(found);
  CHECK_THROWS_AS(double_extend(q, AlgebraData::abelian(2), {x, y}), ValidationError);
  CHECK_THROWS_AS(double_extend(q, AlgebraData(1), {Mat::identity(4)}), ValidationError);
  AlgebraData not_lie(3);
  not_lie.set_bracket(0, 1, e(3, 0));
  not_lie.set_bracket(0, 2, e(3, 1));
  CHECK_THROWS_AS(double_extend(q, not_lie, {Mat(4, 4), Mat(4, 4), Mat(4, 4)}), ValidationError);
  CHECK_THROWS_AS(double_extend(q, AlgebraData(2), {Mat(4, 4)}), ValidationError);
}

TEST_CASE("property: a one-dimensional B reduces double_extend to double_extend_1d") {
  oracle::Gen g(31);
  for (int t = 0; t < 40; ++t) {
    const auto bases = base_algebras();
    const QuadraticStructure &q = bases[static_cast<std::size_t>(g.range(0, 4))];
    const Mat d = random_skew_derivation(g, q);
    CHECK(double_extend(q, AlgebraData(1), {d}) == double_extend_1d(q, SkewDerivation(q, d)));
  }
}

TEST_CASE("one-dimensional extension basics") {
  const QuadraticStructure q = hyperbolic_abelian(2);
  const QuadraticStructure ext = double_extend_1d(q, SkewDerivation(q, Mat(4, 4)));
  CHECK(ext.dim() == 6);
  CHECK(ext.alg().is_abelian());
  CHECK(ext.form()(0, 5) == Scalar(1));
  CHECK(ext.form().block(1, 1, 4, 4) == q.form());
}

TEST_CASE("extending A_2 by the displayed d_2 gives the 6-dimensional catalog algebra") {
  // Display basis b_2, b_1, b_1*, b_2*; canonical basis b_1, b_2, b_1*, b_2*.
  const Mat shown = Mat::from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(telescopic_order(build_chain(delta_inv(parse_trivector("123"))).derivs()[2]) == shown);
  const QuadraticStructure a2 = hyperbolic_abelian(2);
  Mat d2(4, 4);
  d2(2, 1) = -1; // b_2 -> -b_1*
  d2(3, 0) = 1;  // b_1 -> b_2*
  const QuadraticStructure ext = double_extend_1d(a2, SkewDerivation(a2, d2));
  CHECK(nilindex(ext.alg()) == 2);
  CHECK(algebra_type(ext.alg()) == AlgebraType{3, 3});
  CHECK(is_reduced(ext.alg()));
  // The re-ordering b_3 to third place realises the catalog table verbatim.
  Mat p(6, 6);
  p(1, 0) = 1; // b_1
  p(2, 1) = 1; // b_2
  p(0, 2) = 1; // b_3 = b
  p(3, 3) = 1; // b_1*
  p(4, 4) = 1; // b_2*
  p(5, 5) = 1; // b_3* = beta
  CHECK(change_basis(ext, p) == algebra_from_trivector(parse_trivector("123")));
}

TEST_CASE("centre formula") {
  const QuadraticStructure q = hyperbolic_abelian(2);
  const SkewDerivation zero(q, Mat(4, 4));
  CHECK(centre_formula_1d(q, zero).is_full());
  CHECK(centre(double_extend_1d(q, zero).alg()).is_full());

  const QuadraticStructure a(AlgebraData::abelian(4), oracle::jordan_form(2));
  const SkewDerivation d(a, oracle::jordan_derivation(2));
  const Subspace formula = centre_formula_1d(a, d);
  CHECK(formula == centre(double_extend_1d(a, d).alg()));
  // Z(A) n ker d is span{e_-1, e_1}; d is outer, so only K beta is added.
  CHECK(formula == Subspace::span(6, {e(6, 2), e(6, 3), e(6, 5)}));

  const ExtensionChain ch = build_chain(delta_inv(parse_trivector("123")));
  const QuadraticStructure a2 = chain_algebras(ch)[2];
  const SkewDerivation d2(a2, ch.derivs()[2]);
  CHECK(centre_formula_1d(a2, d2).dim() == 3);
  CHECK(centre_formula_1d(a2, d2) == centre(double_extend_1d(a2, d2).alg()));
}

TEST_CASE("inner derivations") {
  const QuadraticStructure q = algebra_from_trivector(parse_trivector("123+145"));
  const Vec x = e(10, 0) + Scalar(2) * e(10, 3);
  const Mat ad = q.alg().ad(x);
  const auto found = inner_element(q.alg(), ad);
  REQUIRE(found.has_value());
  CHECK(q.alg().ad(*found) == ad);
  const SkewDerivation sd(q, ad);
  CHECK(centre_formula_1d(q, sd) == centre(double_extend_1d(q, sd).alg()));
  // On an abelian algebra every nonzero derivation is outer.
  Mat outer(4, 4);
  outer(0, 3) = 1;
  outer(1, 2) = -1;
  CHECK_FALSE(inner_element(AlgebraData::abelian(4), outer).has_value());
}

TEST_CASE("two-step criterion") {
  oracle::Gen g(12);
  const QuadraticStructure q = hyperbolic_abelian(3);
  CHECK_FALSE(two_step_criterion(q, SkewDerivation(q, Mat(6, 6))));
  int nonzero = 0;
  for (int t = 0; t < 20; ++t) {
    const Mat d = square_zero_derivation(g, 3);
    if (d.is_zero())
      continue;
    ++nonzero;
    REQUIRE((d * d).is_zero());
    CHECK(two_step_criterion(q, SkewDerivation(q, d)));
    CHECK(nilindex(double_extend_1d(q, SkewDerivation(q, d)).alg()) == 2);
  }
  CHECK(nonzero > 0);
}

TEST_CASE("property: criterion, centre formula and nilindex monotonicity on random extensions") {
  oracle::Gen g(2718);
  int two_step = 0;
  for (int t = 0; t < 60; ++t) {
    const auto bases = base_algebras();
    const QuadraticStructure &q = bases[static_cast<std::size_t>(g.range(0, 4))];
    const Mat d = (q.alg().is_abelian() && q.form() == hyperbolic_form(q.dim() / 2) && g.coin(50))
                      ? square_zero_derivation(g, q.dim() / 2)
                      : random_skew_derivation(g, q);
    const SkewDerivation sd(q, d);
    const QuadraticStructure ext = double_extend_1d(q, sd);
    const auto ni = nilindex(ext.alg());
    const bool crit = two_step_criterion(q, sd);
    CHECK(crit == (ni == 2));
    two_step += crit;
    CHECK(centre_formula_1d(q, sd) == centre(ext.alg()));
    const auto base_ni = nilindex(q.alg());
    if (ni && base_ni)
      CHECK(*base_ni <= *ni);
    CHECK(oracle::jacobi(oracle::tensor_of(ext.alg())));
    CHECK(oracle::invariant(oracle::tensor_of(ext.alg()), oracle::to_dense(ext.form())));
  }
  CHECK(two_step > 0);
}

TEST_CASE("build_chain matches the displayed layouts of d_2, d_3 and d_4") {
  const CocycleCoeffs c = generic_coeffs(5);
  const ExtensionChain ch = build_chain(c);
  const auto D = [&](std::size_t i, std::size_t j, std::size_t k) { return c.get(i - 1, j - 1, k - 1); };
  CHECK(ch.derivs()[0].rows() == 0);
  CHECK(ch.derivs()[1].is_zero());

  Mat d2(4, 4);
  d2(2, 0) = -D(1, 2, 3);
  d2(3, 1) = D(1, 2, 3);
  CHECK(telescopic_order(ch.derivs()[2]) == d2);

  Mat d3(6, 6);
  d3(3, 0) = -D(1, 3, 4);
  d3(3, 1) = -D(1, 2, 4);
  d3(4, 0) = -D(2, 3, 4);
  d3(4, 2) = D(1, 2, 4);
  d3(5, 1) = D(2, 3, 4);
  d3(5, 2) = D(1, 3, 4);
  CHECK(telescopic_order(ch.derivs()[3]) == d3);

  Mat d4(8, 8);
  const long rows[4][4][3] = {
      {{1, 4, 5}, {1, 3, 5}, {1, 2, 5}, {0, 0, 0}},
      {{2, 4, 5}, {2, 3, 5}, {0, 0, 0}, {1, 2, 5}},
      {{3, 4, 5}, {0, 0, 0}, {2, 3, 5}, {1, 3, 5}},
      {{0, 0, 0}, {3, 4, 5}, {2, 4, 5}, {1, 4, 5}},
  };
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t col = 0; col < 4; ++col) {
      const auto &ijk = rows[r][col];
      if (ijk[0] == 0)
        continue;
      const Scalar v = D(static_cast<std::size_t>(ijk[0]), static_cast<std::size_t>(ijk[1]),
                         static_cast<std::size_t>(ijk[2]));
      // Below the anti-diagonal the entries carry a minus sign.
      d4(4 + r, col) = (r + col < 3) ? -v : v;
    }
  CHECK(telescopic_order(ch.derivs()[4]) == d4);
}

TEST_CASE("build_chain: zero cocycle and size limits") {
  const ExtensionChain ch = build_chain(CocycleCoeffs(4));
  CHECK_FALSE(ch.nnp());
  CHECK(ch.two_step_property());
  for (const auto &d : ch.derivs())
    CHECK(d.is_zero());
  CHECK_THROWS(build_chain(CocycleCoeffs(2)));
  CHECK_THROWS(chain_to_algebra(ch));
}

TEST_CASE("chain_to_algebra reproduces catalog tables") {
  CHECK(chain_to_algebra(build_chain(delta_inv(parse_trivector("123")))) ==
        algebra_from_trivector(parse_trivector("123")));
  const QuadraticStructure l61 = chain_to_algebra(build_chain(delta_inv(parse_trivector("123+456"))));
  CHECK(oracle::products_of(l61.alg()) == oracle::parse_table("12:+3 13:-2 23:+1 45:+6 46:-5 56:+4"));
}

TEST_CASE("property: folding, closed formula and coefficients agree on the catalog") {
  for (const auto &entry : catalog()) {
    const CocycleCoeffs c = delta_inv(entry.coeffs());
    const ExtensionChain ch = build_chain(c);
    CHECK(ch.nnp());
    CHECK(ch.two_step_property());
    const auto links = chain_algebras(ch);
    CHECK(links.back() == chain_to_algebra(ch));
    CHECK(chain_products(ch) == static_cast<const AlternatingCoeffs &>(c));
    CHECK(chain_reduced_check(ch));
  }
}

TEST_CASE("property: 2SP chains keep A_k^2 inside the dual block inside Z(A_k)") {
  oracle::Gen g(77);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.range(3, 6));
    CocycleCoeffs c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (g.coin(40))
            c.set(i, j, k, Scalar(g.range(-3, 3)));
    const ExtensionChain ch = build_chain(c);
    const auto links = chain_algebras(ch);
    for (std::size_t k = 1; k < links.size(); ++k) {
      std::vector<Vec> duals;
      for (std::size_t i = 0; i < k; ++i)
        duals.push_back(e(2 * k, k + i));
      const Subspace dual = Subspace::span(2 * k, duals);
      CHECK(dual.contains(derived_algebra(links[k].alg())));
      CHECK(centre(links[k].alg()).contains(dual));
    }
    if (!c.is_zero()) {
      const QuadraticStructure q = chain_to_algebra(ch);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            CHECK(q.pairing(q.alg().basis_bracket(i, j), e(2 * n, k)) == c.get(i, j, k));
      CHECK(chain_reduced_check(ch) == is_reduced(q.alg()));
    }
  }
}

TEST_CASE("chain reducedness check") {
  CHECK(chain_reduced_check(build_chain(delta_inv(parse_trivector("123")))));
  CHECK_FALSE(chain_reduced_check(build_chain(delta_inv(parse_trivector("123", 4)))));
  CHECK_FALSE(chain_reduced_check(build_chain(CocycleCoeffs(3))));
}

TEST_CASE("2SP fails for a chain whose derivation leaves the dual block") {
  // d_2 with b_1 -> b_2*, b_2 -> -b_1* is fine; adding b_1* -> b_2 (skew with
  // b_2* -> -b_1) keeps skewness but breaks im d in the dual block.
  Mat d2(4, 4);
  d2(3, 0) = 1;
  d2(2, 1) = -1;
  d2(1, 2) = 1;
  d2(0, 3) = -1;
  const ExtensionChain ch({Mat(0, 0), Mat(2, 2), d2});
  CHECK(ch.nnp());
  CHECK_FALSE(ch.two_step_property());
  CHECK_THROWS(chain_to_algebra(ch));
}
