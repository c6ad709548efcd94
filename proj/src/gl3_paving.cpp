#include "fundom/gl3_paving.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace fundom {

namespace {

struct N {
  int n1;
  int n2;
};

N sorted_params(const RootValuation& rv) {
  if (rv.rank() != 3) throw std::invalid_argument("GL_3 valuation expected");
  if (!rv.sorted()) throw std::invalid_argument("requires n1 <= n2");
  return {rv.n(0), rv.n(1)};
}

void require_triangle(const N& n, const Coweight& mu) {
  if (mu.rank() != 3) throw std::invalid_argument("GL_3 coweight expected");
  if (mu[0] < 0 || mu[1] < 0 || mu[2] < 0 || mu.level() != 2 * n.n1 + n.n2) {
    throw std::invalid_argument("point " + mu.str() + " is not in the triangle");
  }
}

int f(int x) { return x >= 0 ? x : -x - 1; }

IntPolynomial line(int lo, int hi) { return IntPolynomial::geometric(lo, hi); }

}  // namespace

std::string_view to_string(TriangleRegion r) {
  switch (r) {
    case TriangleRegion::R1: return "R1";
    case TriangleRegion::R1p: return "R1p";
    case TriangleRegion::R2: return "R2";
    case TriangleRegion::R2p: return "R2p";
    case TriangleRegion::R3: return "R3";
    case TriangleRegion::R4: return "R4";
    case TriangleRegion::R4p: return "R4p";
  }
  return "?";
}

std::string_view to_string(ComplementRegion r) {
  switch (r) {
    case ComplementRegion::T1: return "T1";
    case ComplementRegion::T2: return "T2";
    case ComplementRegion::T3: return "T3";
    case ComplementRegion::T1p: return "T1p";
  }
  return "?";
}

std::string_view to_string(VRegion r) {
  switch (r) {
    case VRegion::V1: return "V1";
    case VRegion::V1p: return "V1p";
    case VRegion::V2: return "V2";
    case VRegion::V3: return "V3";
  }
  return "?";
}

NormalizedValuation normalize_gl3(const RootValuation& rv) {
  if (rv.rank() != 3) throw std::invalid_argument("GL_3 valuation expected");
  if (rv.sorted()) return {rv, false};
  return {rv.swapped(), true};
}

std::vector<Coweight> triangle_points(const RootValuation& rv) {
  const N n = sorted_params(rv);
  const int level = 2 * n.n1 + n.n2;
  std::vector<Coweight> out;
  for (int a = 0; a <= level; ++a) {
    for (int b = 0; a + b <= level; ++b) out.push_back(Coweight{a, b, level - a - b});
  }
  return out;
}

int cell_dimension(const RootValuation& rv, const Coweight& mu) {
  const N n = sorted_params(rv);
  require_triangle(n, mu);
  return std::min(n.n1, mu[1]) + std::min(n.n1, mu[2]) + std::min(n.n2, f(mu[1] - mu[2]));
}

std::vector<TriangleRegion> triangle_region_matches(const RootValuation& rv, const Coweight& mu) {
  const N n = sorted_params(rv);
  require_triangle(n, mu);
  const int m1 = mu[0];
  const int m2 = mu[1];
  const int m3 = mu[2];
  std::vector<TriangleRegion> hits;
  if (m2 - m3 > n.n2) hits.push_back(TriangleRegion::R1);
  if (m3 - m2 > n.n2) hits.push_back(TriangleRegion::R1p);
  if (m2 - m3 <= n.n2 && m3 < n.n1 && m2 > n.n1) hits.push_back(TriangleRegion::R2);
  if (m3 - m2 <= n.n2 && m2 < n.n1 && m3 > n.n1) hits.push_back(TriangleRegion::R2p);
  if (m3 >= n.n1 && m2 >= n.n1) hits.push_back(TriangleRegion::R3);
  if (m3 <= n.n1 && m2 <= n.n1 && n.n2 < m1 && m1 <= n.n1 + n.n2) hits.push_back(TriangleRegion::R4);
  if (m3 < n.n1 && m2 < n.n1 && n.n1 + n.n2 < m1 && m1 <= 2 * n.n1 + n.n2) hits.push_back(TriangleRegion::R4p);
  return hits;
}

TriangleRegion triangle_region(const RootValuation& rv, const Coweight& mu) {
  const auto hits = triangle_region_matches(rv, mu);
  if (hits.size() != 1) {
    std::ostringstream os;
    os << "triangle point " << mu.str() << " matches " << hits.size() << " regions";
    throw InvariantViolation(os.str());
  }
  return hits.front();
}

IntPolynomial region_sum_bruteforce(const RootValuation& rv, TriangleRegion label) {
  IntPolynomial p;
  for (const auto& mu : triangle_points(rv)) {
    if (triangle_region(rv, mu) == label) p.add_term(cell_dimension(rv, mu), 1);
  }
  return p;
}

IntPolynomial region_sum_closed(const RootValuation& rv, TriangleRegion label) {
  const N n = sorted_params(rv);
  const int n1 = n.n1;
  const int n2 = n.n2;
  IntPolynomial p;
  switch (label) {
    case TriangleRegion::R1:
    case TriangleRegion::R1p:
      for (int i = 1; i <= n1; ++i) p.add_term(2 * n1 + n2 - i, 2 * i);
      break;
    case TriangleRegion::R2:
      p += line(2 * n1 + 1, n1 + n2) * n1;
      for (int i = 1; i <= n1 - 1; ++i) p.add_term(n1 + n2 + i, n1 - i);
      break;
    case TriangleRegion::R2p:
      p += line(2 * n1, n1 + n2 - 1) * n1;
      for (int i = 1; i <= n1 - 1; ++i) p.add_term(n1 + n2 + i - 1, n1 - i);
      break;
    case TriangleRegion::R3:
      for (int i = 0; i <= n2; ++i) p.add_term(2 * n1 + i, n2 + 1 - i);
      break;
    case TriangleRegion::R4:
      p.add_term(2 * n1, n1);
      for (int i = 0; i <= n1 - 1; ++i) p.add_term(n1 + i, i + 1);
      break;
    case TriangleRegion::R4p:
      for (int i = 0; i <= n1 - 1; ++i) p += line(i, 2 * i);
      break;
  }
  return p;
}

std::vector<ComplementRegion> complement_region_matches(const RootValuation& rv, const Coweight& mu) {
  const N n = sorted_params(rv);
  require_triangle(n, mu);
  const int top = n.n1 + n.n2;
  std::vector<ComplementRegion> hits;
  if (mu[0] >= top + 1) hits.push_back(ComplementRegion::T1);
  if (mu[1] >= top + 1) hits.push_back(ComplementRegion::T2);
  if (mu[2] >= top + 1) hits.push_back(ComplementRegion::T3);
  if (2 * n.n1 + 1 <= mu[0] && mu[0] <= top) hits.push_back(ComplementRegion::T1p);
  return hits;
}

std::optional<ComplementRegion> complement_region(const RootValuation& rv, const Coweight& mu) {
  const auto hits = complement_region_matches(rv, mu);
  if (hits.size() > 1) throw InvariantViolation("complement point " + mu.str() + " matches several T-regions");
  if (hits.empty()) return std::nullopt;
  return hits.front();
}

int complement_exponent(const RootValuation& rv, ComplementRegion label, const Coweight& mu) {
  const N n = sorted_params(rv);
  require_triangle(n, mu);
  switch (label) {
    case ComplementRegion::T1:
    case ComplementRegion::T1p:
      return 2 * n.n1 + f(mu[1] - mu[2]);
    case ComplementRegion::T2:
    case ComplementRegion::T3:
      return n.n1 + n.n2 + std::min(mu[1], mu[2]);
  }
  return 0;
}

IntPolynomial complement_sum_bruteforce(const RootValuation& rv, ComplementRegion label) {
  IntPolynomial p;
  for (const auto& mu : triangle_points(rv)) {
    if (complement_region(rv, mu) == label) p.add_term(complement_exponent(rv, label, mu), 1);
  }
  return p;
}

IntPolynomial complement_sum_closed(const RootValuation& rv, ComplementRegion label) {
  const N n = sorted_params(rv);
  const int n1 = n.n1;
  const int n2 = n.n2;
  IntPolynomial p;
  switch (label) {
    case ComplementRegion::T1:
      for (int i = 0; i <= n1 - 1; ++i) p += line(2 * n1, 2 * n1 + i);
      break;
    case ComplementRegion::T2:
    case ComplementRegion::T3:
      for (int i = 1; i <= n1; ++i) p.add_term(2 * n1 + n2 - i, i);
      break;
    case ComplementRegion::T1p:
      for (int i = n1; i <= n2 - 1; ++i) p += line(2 * n1, 2 * n1 + i);
      break;
  }
  return p;
}

IntPolynomial poincare_pipeline(const RootValuation& rv) {
  const RootValuation sorted = normalize_gl3(rv).rv;
  IntPolynomial p;
  for (auto r : kTriangleRegions) p += region_sum_closed(sorted, r);
  for (auto r : kComplementRegions) p -= complement_sum_closed(sorted, r);
  return p;
}

IntPolynomial closed_form(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("n1, n2 must be positive");
  if (n1 > n2) std::swap(n1, n2);
  IntPolynomial p;
  for (int i = 1; i <= n1; ++i) {
    p.add_term(4 * i - 2, i);
    p.add_term(4 * i - 4, i);
  }
  for (int i = 2 * n1; i <= n1 + n2 - 1; ++i) p.add_term(2 * i, 2 * n1 + 1);
  for (int i = n1 + n2; i <= 2 * n1 + n2 - 1; ++i) p.add_term(2 * i, 4 * (2 * n1 + n2 - i));
  p.add_term(4 * n1 + 2 * n2, 1);
  return p;
}

IntPolynomial closed_form(const RootValuation& rv) {
  if (rv.rank() != 3) throw std::invalid_argument("GL_3 valuation expected");
  return closed_form(rv.n(0), rv.n(1));
}

std::vector<Coweight> fundamental_fixed_points(const RootValuation& rv) {
  const N n = sorted_params(rv);
  std::vector<Coweight> out;
  for (const auto& mu : triangle_points(rv)) {
    if (mu[0] <= 2 * n.n1 && mu[1] <= n.n1 + n.n2 && mu[2] <= n.n1 + n.n2) out.push_back(mu);
  }
  return out;
}

std::vector<VRegion> v_region_matches(const RootValuation& rv, const Coweight& mu) {
  const N n = sorted_params(rv);
  require_triangle(n, mu);
  const int a = mu[0] - n.n1;
  const int b = mu[1] - n.n2;
  const int c = mu[2] - n.n2;
  const int gap = n.n2 - n.n1;
  std::vector<VRegion> hits;
  if (a <= b && a <= c) hits.push_back(VRegion::V1);
  if (a >= b && a >= c && mu[1] <= gap && mu[2] <= gap) hits.push_back(VRegion::V1p);
  if (b < a && b < c && mu[2] > gap) hits.push_back(VRegion::V2);
  if (c < a && c < b && mu[1] > gap) hits.push_back(VRegion::V3);
  return hits;
}

VAssignment v_region(const RootValuation& rv, const Coweight& mu) {
  const auto hits = v_region_matches(rv, mu);
  if (hits.empty()) throw InvariantViolation("fixed point " + mu.str() + " is in no V-region");
  if (hits.size() == 1) return {hits.front(), false};
  if (hits.size() == 2 && hits[0] == VRegion::V1 && hits[1] == VRegion::V1p) return {VRegion::V1, true};
  throw InvariantViolation("fixed point " + mu.str() + " is in several V-regions");
}

VPartitionReport v_partition(const RootValuation& rv) {
  VPartitionReport report;
  for (const auto& mu : fundamental_fixed_points(rv)) {
    const auto hits = v_region_matches(rv, mu);
    if (hits.empty()) {
      report.gaps.push_back(mu);
      continue;
    }
    const auto a = v_region(rv, mu);
    if (a.overlap) report.overlap.push_back(mu);
    report.labelled.emplace_back(mu, a.label);
  }
  return report;
}

}  // namespace fundom
