#include <doctest.h>

#include "fundom/gl3_paving.hpp"
#include "fundom/series.hpp"

using namespace fundom;

TEST_CASE("geometric series in T1 T2") {
  RationalFn f;
  f.terms = {{1, {{1, 0, 0, 0}}, {{0, 1, 1}}}};
  const BiSeries s = expand_rational(f, 4);
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) CHECK(s.at(a, b) == (a == b ? IntPolynomial{1} : IntPolynomial{}));
  }
}

TEST_CASE("convolution of two geometric series") {
  RationalFn f;
  f.terms = {{1, {{1, 0, 1, 1}}, {{0, 0, 1}, {0, 1, 1}}}};
  const BiSeries s = expand_rational(f, 4);
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      const bool hit = (a == 1 && b >= 1) || (a == 2 && b == 2);
      CHECK(s.at(a, b) == (hit ? IntPolynomial{1} : IntPolynomial{}));
    }
  }
}

TEST_CASE("factors carrying t") {
  RationalFn f;
  f.terms = {{-1, {{3, 1, 0, 1}}, {{2, 0, 1}}}};
  const BiSeries s = expand_rational(f, 3);
  CHECK(s.at(0, 1) == IntPolynomial::monomial(1, -3));
  CHECK(s.at(0, 2) == IntPolynomial::monomial(3, -3));
  CHECK(s.at(0, 3) == IntPolynomial::monomial(5, -3));
}

TEST_CASE("bad factors are rejected") {
  RationalFn f;
  f.terms = {{1, {{1, 0, 0, 0}}, {{2, 0, 0}}}};
  CHECK_THROWS_AS(expand_rational(f, 3), std::invalid_argument);
  f.terms = {{1, {{1, 0, 0, 0}}, {{0, -1, 2}}}};
  CHECK_THROWS_AS(expand_rational(f, 3), std::invalid_argument);
}

TEST_CASE("expansion is additive over terms") {
  const RationalFn f = corollary_expression();
  REQUIRE(f.terms.size() == 7);
  BiSeries sum(10);
  for (const auto& term : f.terms) sum += expand_term(term, 10);
  CHECK(series_equal(sum, expand_rational(f, 10)).equal);
}

TEST_CASE("corollary coefficient at (1,1)") {
  const BiSeries s = expand_rational(corollary_expression(), 4);
  CHECK(s.at(1, 1) == closed_form(1, 1));
  CHECK(s.at(1, 1).str("t") == "1 + t^2 + 4*t^4 + t^6");
}

TEST_CASE("direct series") {
  const BiSeries d = direct_series(12);
  CHECK(d.at(1, 1) == closed_form(1, 1));
  CHECK(d.at(1, 2) == d.at(2, 1));
  CHECK(d.at(2, 2) == closed_form(2, 2));
  CHECK(d.at(0, 3).is_zero());
  CHECK(series_equal(d, d.transposed()).equal);
  for (int a = 1; a <= 12; ++a) {
    for (int b = 1; a + b <= 12; ++b) CHECK(d.at(a, b).nonnegative());
  }
  CHECK_THROWS_AS(direct_series(1), std::invalid_argument);
}

TEST_CASE("series comparison reports the first difference") {
  const BiSeries a = direct_series(4);
  CHECK(series_equal(a, a).equal);
  BiSeries b = a;
  b.at_mut(2, 2) += IntPolynomial::monomial(3);
  b.at_mut(1, 3) += IntPolynomial::monomial(0);
  const auto cmp = series_equal(a, b);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.n1 == 1);
  CHECK(cmp.n2 == 3);
  CHECK(cmp.mismatches == 2);
  CHECK(cmp.left == a.at(1, 3));
  CHECK(cmp.right == b.at(1, 3));
  CHECK_THROWS_AS(series_equal(a, direct_series(5)), std::invalid_argument);
}

// The displayed expression only produces T1^a T2^b with a <= b and carries the
// off-diagonal coefficients twice; these two identities hold exactly.
TEST_CASE("corollary expression against the folded and symmetrised series") {
  const BiSeries e = expand_rational(corollary_expression(), 12);
  CHECK(series_equal(e, folded_direct_series(12)).equal);
  CHECK(series_equal(symmetrize(e), direct_series(12)).equal);
  for (int a = 1; a <= 12; ++a) {
    for (int b = a; a + b <= 12; ++b) CHECK(e.at(a, b).degree() == 4 * a + 2 * b);
  }
  const auto cmp = series_equal(e, direct_series(12));
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.n1 == 1);
  CHECK(cmp.n2 == 2);
  CHECK(cmp.left == closed_form(1, 2) * 2);
}

TEST_CASE("rendering of the expression") {
  const std::string s = corollary_expression().str();
  CHECK(s.rfind("(2*t^2*T1*T2 + 2*T1*T2)/((1 - T2)", 0) == 0);
  CHECK(s.find(" - (t^6*T1*T2)/((1 - t^6*T1*T2))") != std::string::npos);
}
