#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "quadlie/algebra.hpp"
#include "quadlie/catalog.hpp"
#include "quadlie/quadfam.hpp"
#include "quadlie/trivector.hpp"

#include <sstream>

using namespace quadlie;

namespace {

/// Built straight from the definition, M_i(k, j) = c_ijk, without the converter.
QuadraticFamily family_of(const AlternatingCoeffs &c) {
  QuadraticFamily f{c.n(), {}};
  for (std::size_t i = 0; i < c.n(); ++i) {
    Mat m(c.n(), c.n());
    for (std::size_t j = 0; j < c.n(); ++j)
      for (std::size_t k = 0; k < c.n(); ++k)
        m(k, j) = c.get(i, j, k);
    f.mats.push_back(m);
  }
  return f;
}

AlternatingCoeffs random_coeffs(oracle::Gen &g, std::size_t n, int pct) {
  AlternatingCoeffs c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (g.coin(pct))
          c.set(i, j, k, Scalar(g.range(-3, 3)));
  return c;
}

bool has_law(const std::vector<FamilyViolation> &v, int law) {
  for (const auto &x : v)
    if (x.law == law)
      return true;
  return false;
}

/// The generic five-variable layout, row by row; "-134" means -m_134.
const char *const generic_f5[5] = {
    "0 0 0 0 123 124 125 134 135 145",
    "0 -123 -124 -125 0 0 0 234 235 245",
    "123 0 -134 -135 0 -234 -235 0 0 345",
    "124 134 0 -145 234 0 -245 0 -345 0",
    "125 135 145 0 235 245 0 345 0 0",
};

} // namespace

TEST_CASE("validate_family accepts the 123 family and the zero family") {
  const QuadraticFamily f = family_of(parse_trivector("123"));
  CHECK(validate_family(f).empty());
  CHECK(f.mats[0](2, 1) == Scalar(1));
  QuadraticFamily zero{4, std::vector<Mat>(4, Mat(4, 4))};
  CHECK(is_valid_family(zero));
}

TEST_CASE("validate_family reports each law") {
  QuadraticFamily sym{3, std::vector<Mat>(3, Mat(3, 3))};
  sym.mats[0](1, 2) = 1;
  sym.mats[0](2, 1) = 1;
  CHECK(has_law(validate_family(sym), 1));

  QuadraticFamily col{3, std::vector<Mat>(3, Mat(3, 3))};
  col.mats[1](0, 1) = 1;
  col.mats[1](1, 0) = -1;
  CHECK(has_law(validate_family(col), 2));
  CHECK_FALSE(has_law(validate_family(col), 1));

  QuadraticFamily mixed = family_of(parse_trivector("123"));
  mixed.mats[2] = Mat(3, 3);
  CHECK(has_law(validate_family(mixed), 3));

  QuadraticFamily shape{3, std::vector<Mat>(2, Mat(3, 3))};
  CHECK(has_law(validate_family(shape), 0));
  CHECK_THROWS_AS(f_matrix(shape), std::invalid_argument);
}

TEST_CASE("F matrix of the 123 family") {
  const Mat f = f_matrix(family_of(parse_trivector("123")));
  CHECK(f == Mat::from_rows({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}));
  CHECK(rank(f) == 3);
  CHECK(is_nondegenerate_family(family_of(parse_trivector("123"))));
  CHECK(f_matrix(QuadraticFamily{3, std::vector<Mat>(3, Mat(3, 3))}).is_zero());
  CHECK_FALSE(is_nondegenerate_family(QuadraticFamily{3, std::vector<Mat>(3, Mat(3, 3))}));
}

TEST_CASE("F matrix matches the generic five-variable layout") {
  oracle::Gen g(50);
  for (int t = 0; t < 20; ++t) {
    const AlternatingCoeffs c = random_coeffs(g, 5, 70);
    const Mat f = f_matrix(family_of(c));
    REQUIRE(f.rows() == 5);
    REQUIRE(f.cols() == 10);
    for (std::size_t r = 0; r < 5; ++r) {
      std::istringstream row(generic_f5[r]);
      std::string cell;
      for (std::size_t col = 0; col < 10; ++col) {
        row >> cell;
        Scalar want(0);
        if (cell != "0") {
          const bool neg = cell[0] == '-';
          const std::string d = neg ? cell.substr(1) : cell;
          want = c.get(static_cast<std::size_t>(d[0] - '1'), static_cast<std::size_t>(d[1] - '1'),
                       static_cast<std::size_t>(d[2] - '1'));
          if (neg)
            want = -want;
        }
        CHECK(f(r, col) == want);
      }
    }
    CHECK(rank(f) == oracle::rank(oracle::f_matrix(c)));
  }
}

TEST_CASE("a degenerate family at n = 4") {
  const QuadraticFamily f = family_of(parse_trivector("123", 4));
  const Mat fm = f_matrix(f);
  CHECK(is_zero(fm.row(3)));
  CHECK_FALSE(is_nondegenerate_family(f));
  const QuadraticStructure q = algebra_from_family(f);
  CHECK(nilindex(q.alg()) == 2);
  CHECK_FALSE(is_reduced(q.alg()));
}

TEST_CASE("algebra_from_family reproduces catalog entries") {
  const QuadraticStructure l31 = algebra_from_family(family_of(parse_trivector("123")));
  CHECK(oracle::products_of(l31.alg()) == oracle::parse_table("12:+3 13:-2 23:+1"));
  CHECK(l31.form() == hyperbolic_form(3));

  AlternatingCoeffs c(5);
  c.set(0, 1, 2, 1);
  c.set(0, 3, 4, 1);
  const QuadraticStructure l51 = algebra_from_family(family_of(c));
  CHECK(oracle::products_of(l51.alg()) == oracle::parse_table(oracle::printed_tables()[1].products));
  CHECK(l51.alg() == algebra_from_trivector(catalog_entry("L5,1").coeffs()).alg());
  CHECK(is_reduced(l51.alg()));

  CHECK_THROWS_AS(algebra_from_family(QuadraticFamily{3, std::vector<Mat>(3, Mat(3, 3))}), ValidationError);
  QuadraticFamily bad = family_of(parse_trivector("123"));
  bad.mats[0](0, 1) = 5;
  CHECK_THROWS_AS(algebra_from_family(bad), ValidationError);
}

TEST_CASE("property: structure constants of a valid family are alternating") {
  oracle::Gen g(7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.range(3, 7));
    const QuadraticFamily f = family_of(random_coeffs(g, n, 40));
    REQUIRE(is_valid_family(f));
    auto m = [&](std::size_t i, std::size_t j, std::size_t k) { return f.mats[i](k, j); };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          CHECK(m(i, j, k) == m(j, k, i));
          CHECK(m(i, j, k) == m(k, i, j));
          CHECK(m(i, j, k) == -m(i, k, j));
        }
  }
}

TEST_CASE("property: phi([v_i, v_j], v_k) = m_ijk on the constructed algebra") {
  oracle::Gen g(8);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.range(3, 6));
    AlternatingCoeffs c = random_coeffs(g, n, 40);
    if (c.is_zero())
      c.set(0, 1, 2, 1);
    const QuadraticFamily f = family_of(c);
    const QuadraticStructure q = algebra_from_family(f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          CHECK(q.pairing(q.alg().basis_bracket(i, j), unit_vec(2 * n, k)) == f.mats[i](k, j));
  }
}

TEST_CASE("property: reduced, non-degenerate and A^2 = span of duals agree") {
  oracle::Gen g(9);
  int reduced = 0, not_reduced = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.range(3, 7));
    AlternatingCoeffs c = random_coeffs(g, n, static_cast<int>(g.range(10, 60)));
    if (c.is_zero())
      continue;
    const QuadraticFamily f = family_of(c);
    const QuadraticStructure q = algebra_from_family(f);
    std::vector<Vec> duals;
    for (std::size_t k = 0; k < n; ++k)
      duals.push_back(unit_vec(2 * n, n + k));
    const bool a = is_reduced(q.alg());
    const bool b = is_nondegenerate_family(f);
    const bool d = derived_algebra(q.alg()) == Subspace::span(2 * n, duals);
    CHECK(a == b);
    CHECK(b == d);
    CHECK(b == (oracle::rank(oracle::f_matrix(c)) == n));
    CHECK(oracle::nilindex(oracle::tensor_of(q.alg())) == 2);
    (a ? reduced : not_reduced)++;
  }
  CHECK(reduced > 0);
  CHECK(not_reduced > 0);
}

TEST_CASE("property: non-degenerate families exist at n = 3 and 5 but not at n = 4") {
  oracle::Gen g(10);
  int found[8] = {};
  for (std::size_t n : {3, 4, 5}) {
    for (int t = 0; t < 300; ++t) {
      const QuadraticFamily f = family_of(random_coeffs(g, n, static_cast<int>(g.range(20, 100))));
      found[n] += is_nondegenerate_family(f);
    }
  }
  CHECK(found[3] > 0);
  CHECK(found[4] == 0);
  CHECK(found[5] > 0);
}
