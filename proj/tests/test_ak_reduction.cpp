#include <doctest.h>

#include <set>

#include "ak_oracle.hpp"
#include "fundom/ak_reduction.hpp"
#include "fundom/gl3_paving.hpp"

using namespace fundom;

TEST_CASE("labels") {
  const auto all = ParabolicLabel::all_gl3();
  CHECK(all.size() == 13);
  CHECK(std::set<ParabolicLabel>(all.begin(), all.end()).size() == 13);
  CHECK(ParabolicLabel::full().str() == "G");
  CHECK(ParabolicLabel::maximal(MaximalParabolic::standard(3, 1)).str() == "P{1}|{2,3}");
  CHECK(ParabolicLabel::borel_of(WeylElem({1, 0, 2})).str() == "B[213]");
  CHECK_THROWS(ParabolicLabel::full().borel_elem());
}

TEST_CASE("classification examples") {
  const RootValuation n11{1, 1};
  CHECK(ak_classify(n11, Coweight{1, 1, 1}) == ParabolicLabel::full());
  CHECK(ak_classify(n11, Coweight{10, -4, -3}) == ParabolicLabel::maximal(MaximalParabolic::standard(3, 1)));
  CHECK(ak_classify(RootValuation{1, 2}, Coweight{2, 2, 0}) == ParabolicLabel::full());
  CHECK_THROWS_AS(ak_classify(RootValuation{1, 1, 1}, Coweight{1, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("tie-break scale") {
  const RootValuation rv{1, 2};
  // Vertices reach 3; the point reaches 7.
  CHECK(tie_break_scale(rv, Coweight{7, -2, 0}) == 48);
  CHECK(tie_break_scale(rv, Coweight{1, 1, 1}) == 24);
}

TEST_CASE("agreement with the rational oracle") {
  for (int n1 = 1; n1 <= 3; ++n1) {
    for (int n2 = 1; n2 <= 3; ++n2) {
      const RootValuation rv{n1, n2};
      const AkPartition part(rv);
      const oracle::AkOracle ref(rv);
      const int level = n1 + n2 + std::min(n1, n2);
      for (int l = level - 2; l <= level + 2; ++l) {
        for (const auto& mu : window_points({l, 2 * level + 2})) {
          const auto want = ref.matches(mu);
          REQUIRE(want.size() == 1);
          REQUIRE(part.classify(mu) == want.front());
        }
      }
    }
  }
}

TEST_CASE("scale stability") {
  for (int n1 = 1; n1 <= 4; ++n1) {
    for (int n2 = 1; n2 <= 4; ++n2) {
      const RootValuation rv{n1, n2};
      const AkPartition part(rv);
      const int level = n1 + n2 + std::min(n1, n2);
      for (const auto& mu : window_points({level + 1, 2 * level})) {
        const auto base = part.classify(mu);
        REQUIRE(part.classify(mu, 2) == base);
        REQUIRE(part.classify(mu, 7) == base);
        for (const auto& label : ParabolicLabel::all_gl3()) REQUIRE(part.contains(label, mu) == (label == base));
      }
    }
  }
}

TEST_CASE("full stratum is the fixed-point set") {
  const auto groups = stratum_fixed_points(RootValuation{1, 1}, ParabolicLabel::full(), {3, 5});
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].nu == std::vector<int>{3});
  CHECK(groups[0].points == fundamental_fixed_points(RootValuation{1, 1}));
  CHECK(groups[0].points.size() == 7);
}

TEST_CASE("maximal stratum splits by Levi component") {
  const auto label = ParabolicLabel::maximal(MaximalParabolic::standard(3, 1));
  const auto groups = stratum_fixed_points(RootValuation{1, 1}, label, {3, 4});
  REQUIRE_FALSE(groups.empty());
  std::set<std::vector<int>> seen;
  for (const auto& g : groups) {
    CHECK(seen.insert(g.nu).second);
    for (const auto& mu : g.points) {
      CHECK(g.nu == std::vector<int>{mu[0], mu[1] + mu[2]});
      CHECK(ak_classify(RootValuation{1, 1}, mu) == label);
    }
  }
  CHECK(stratum_fixed_points(RootValuation{1, 1}, label, {3, -1}).empty());
}

TEST_CASE("deep chamber points share one Borel label") {
  for (const auto& rv : {RootValuation{1, 1}, RootValuation{2, 5}}) {
    const AkPartition part(rv);
    const Coweight core{60, 20, -77};
    const auto label = part.classify(core);
    CHECK(label.kind == ParabolicLabel::Kind::Borel);
    for (int a = -3; a <= 3; ++a) {
      for (int b = -3; b <= 3; ++b) CHECK(part.classify(core + Coweight{a, b, -a - b}) == label);
    }
  }
}

TEST_CASE("strip width along the Levi coroot is twice the edge constant") {
  for (int n1 = 1; n1 <= 4; ++n1) {
    for (int n2 = 1; n2 <= 4; ++n2) {
      const RootValuation rv{n1, n2};
      const AkPartition part(rv);
      const auto fam = regular_family(rv);
      const int level = fam.common_level();
      for (const auto& p : MaximalParabolic::all(3)) {
        std::vector<int> pair;
        const bool upper_pair = p.upper_block().size() == 2;
        for (int l = 0; l < 3; ++l) {
          if (p.in_upper(l) == upper_pair) pair.push_back(l);
        }
        const int c = rv.val(pair[0], pair[1]);
        int lo = 1 << 30;
        int hi = -(1 << 30);
        for (const auto& mu : window_points({level, 4 * level})) {
          if (part.classify(mu) != ParabolicLabel::maximal(p)) continue;
          lo = std::min(lo, mu[pair[0]] - mu[pair[1]]);
          hi = std::max(hi, mu[pair[0]] - mu[pair[1]]);
        }
        REQUIRE(hi - lo == 2 * c);
      }
    }
  }
}

TEST_CASE("translated hexagons have exactly one face label") {
  for (int n1 = 1; n1 <= 3; ++n1) {
    for (int n2 = 1; n2 <= 3; ++n2) {
      const RootValuation rv{n1, n2};
      for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
          for (int c = -3; c <= 3; ++c) {
            const auto labels = translate_face_labels(rv, Coweight{a, b, c});
            REQUIRE(labels.size() == 1);
            REQUIRE((labels[0] == ParabolicLabel::full()) == (a == b && b == c));
          }
        }
      }
    }
  }
}
