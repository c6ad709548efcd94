#include <doctest.h>

#include <set>

#include "fundom/gl3_paving.hpp"
#include "fundom/orthogonal_family.hpp"

using namespace fundom;

namespace {

IntPolynomial q(std::initializer_list<IntPolynomial::Coeff> c) { return IntPolynomial(c); }

}  // namespace

TEST_CASE("cell dimension examples") {
  const RootValuation rv{1, 2};
  CHECK(cell_dimension(rv, Coweight{0, 3, 1}) == 4);
  CHECK(cell_dimension(rv, Coweight{4, 0, 0}) == 0);
  CHECK(cell_dimension(rv, Coweight{0, 4, 0}) == 3);
  // mu2 < mu3 loses one: f(-1) = 0.
  CHECK(cell_dimension(rv, Coweight{3, 0, 1}) == 1);
  CHECK_THROWS_AS(cell_dimension(rv, Coweight{5, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(cell_dimension(rv, Coweight{1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cell_dimension(RootValuation{2, 1}, Coweight{5, 0, 0}), std::invalid_argument);
}

TEST_CASE("triangle region examples") {
  const RootValuation rv{1, 2};
  CHECK(triangle_region(rv, Coweight{1, 3, 0}) == TriangleRegion::R1);
  CHECK(triangle_region(rv, Coweight{2, 1, 1}) == TriangleRegion::R3);
  CHECK(triangle_region(rv, Coweight{4, 0, 0}) == TriangleRegion::R4p);
}

TEST_CASE("region sum examples") {
  const RootValuation rv{1, 2};
  CHECK(region_sum_bruteforce(rv, TriangleRegion::R1) == q({0, 0, 0, 2}));
  CHECK(region_sum_bruteforce(rv, TriangleRegion::R3) == q({0, 0, 3, 2, 1}));
  CHECK(region_sum_bruteforce(rv, TriangleRegion::R4p) == q({1}));
  CHECK(region_sum_closed(rv, TriangleRegion::R1) == q({0, 0, 0, 2}));
  CHECK(region_sum_closed(rv, TriangleRegion::R3) == q({0, 0, 3, 2, 1}));
  CHECK(region_sum_closed(rv, TriangleRegion::R2p) == q({0, 0, 1}));
}

TEST_CASE("complement examples") {
  const RootValuation rv{1, 2};
  CHECK(complement_region(rv, Coweight{4, 0, 0}) == ComplementRegion::T1);
  CHECK(complement_region(rv, Coweight{3, 1, 0}) == ComplementRegion::T1p);
  CHECK_FALSE(complement_region(rv, Coweight{2, 2, 0}).has_value());
  CHECK(complement_sum_closed(rv, ComplementRegion::T1) == q({0, 0, 1}));
  CHECK(complement_sum_bruteforce(rv, ComplementRegion::T1) == q({0, 0, 1}));
  CHECK(complement_sum_closed(rv, ComplementRegion::T1p) == q({0, 0, 1, 1}));
  CHECK(complement_sum_closed(rv, ComplementRegion::T2) == q({0, 0, 0, 1}));
}

TEST_CASE("pipeline and closed form examples") {
  CHECK(poincare_pipeline(RootValuation{1, 1}) == q({1, 1, 4, 1}));
  CHECK(poincare_pipeline(RootValuation{1, 2}) == q({1, 1, 3, 4, 1}));
  CHECK(closed_form(1, 1) == q({1, 0, 1, 0, 4, 0, 1}));
  CHECK(closed_form(1, 2) == q({1, 0, 1, 0, 3, 0, 4, 0, 1}));
  CHECK(closed_form(2, 1) == closed_form(1, 2));
  CHECK(poincare_pipeline(RootValuation{2, 1}) == poincare_pipeline(RootValuation{1, 2}));
  CHECK_THROWS_AS(closed_form(0, 2), std::invalid_argument);

  // Hand count for (1,2): triangle total minus complement.
  IntPolynomial triangle;
  for (auto r : kTriangleRegions) triangle += region_sum_closed(RootValuation{1, 2}, r);
  CHECK(triangle == q({1, 1, 5, 7, 1}));
}

TEST_CASE("fixed points") {
  const auto pts = fundamental_fixed_points(RootValuation{1, 1});
  CHECK(pts.size() == 7);
  CHECK(std::find(pts.begin(), pts.end(), Coweight{2, 1, 0}) != pts.end());
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(fundamental_fixed_points(RootValuation{1, 2}).size() == 10);
}

TEST_CASE("V-region examples") {
  CHECK(v_region(RootValuation{1, 1}, Coweight{0, 2, 1}).label == VRegion::V1);
  CHECK(v_region(RootValuation{1, 2}, Coweight{2, 2, 0}).label == VRegion::V3);
  CHECK(v_region(RootValuation{1, 1}, Coweight{2, 1, 0}).label == VRegion::V3);
}

TEST_CASE("partition, oracle and closed-form identities for n1 <= n2 <= 10") {
  for (int n1 = 1; n1 <= 10; ++n1) {
    for (int n2 = n1; n2 <= 10; ++n2) {
      const RootValuation rv{n1, n2};
      const auto tri = triangle_points(rv);
      const int level = 2 * n1 + n2;
      REQUIRE(tri.size() == static_cast<std::size_t>((level + 1) * (level + 2) / 2));
      IntPolynomial total;
      for (const auto& mu : tri) {
        REQUIRE(triangle_region_matches(rv, mu).size() == 1);
        REQUIRE(complement_region_matches(rv, mu).size() <= 1);
        REQUIRE(complement_region(rv, mu).has_value() != hexagon_membership(rv, mu));
      }
      for (auto r : kTriangleRegions) {
        REQUIRE(region_sum_bruteforce(rv, r) == region_sum_closed(rv, r));
        total += region_sum_closed(rv, r);
      }
      REQUIRE(total.evaluate_at_one() == static_cast<IntPolynomial::Coeff>(tri.size()));
      for (auto r : kComplementRegions) REQUIRE(complement_sum_bruteforce(rv, r) == complement_sum_closed(rv, r));

      const IntPolynomial p = closed_form(rv);
      REQUIRE(poincare_pipeline(rv).substitute_square() == p);
      REQUIRE(p.evaluate_at_one() == static_cast<IntPolynomial::Coeff>(fundamental_fixed_points(rv).size()));
      REQUIRE(p[0] == 1);
      REQUIRE(p.degree() == 4 * n1 + 2 * n2);
      REQUIRE(p[p.degree()] == 1);
      REQUIRE(p.only_even_powers());
      REQUIRE(p.nonnegative());
    }
  }
}

TEST_CASE("V-predicates: overlap is at most one point, gaps sit on the tie line") {
  for (int n1 = 1; n1 <= 10; ++n1) {
    for (int n2 = n1; n2 <= 10; ++n2) {
      const RootValuation rv{n1, n2};
      const auto report = v_partition(rv);
      REQUIRE(report.overlap.size() <= 1);
      REQUIRE(report.labelled.size() + report.gaps.size() == fundamental_fixed_points(rv).size());
      for (const auto& mu : report.gaps) {
        CHECK_THROWS_AS(v_region(rv, mu), InvariantViolation);
        // mu'_2 = mu'_3 < mu'_1 with mu2 > n2 - n1: both strict predicates fail.
        CHECK(mu[1] == mu[2]);
        CHECK(mu[1] - n2 < mu[0] - n1);
        CHECK(mu[1] > n2 - n1);
      }
    }
  }
  // The first failure in lexicographic (n1, n2) order.
  const auto r11 = v_partition(RootValuation{1, 1});
  CHECK(r11.gaps.empty());
  const auto r22 = v_partition(RootValuation{2, 2});
  REQUIRE(r22.gaps.size() == 1);
  CHECK(r22.gaps[0] == Coweight{4, 1, 1});
  const auto r14 = v_partition(RootValuation{1, 4});
  REQUIRE(r14.overlap.size() == 1);
  CHECK(r14.overlap[0] == Coweight{0, 3, 3});
}
