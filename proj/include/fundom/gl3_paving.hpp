#pragma once

// Betti-number bookkeeping for the GL_3 fundamental domain F with root
// valuation (n1, n2), n1 <= n2: the triangle Sch(2n1+n2,0,0)^T cut into seven
// regions, the complement of F cut into four, the closed-form Poincare
// polynomial and the four-piece nonstandard cut of F itself.
//
// Polynomials are in q = t^2 unless the name says otherwise.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "fundom/polynomial.hpp"
#include "fundom/weyl_lattice.hpp"

namespace fundom {

enum class TriangleRegion { R1, R1p, R2, R2p, R3, R4, R4p };
enum class ComplementRegion { T1, T2, T3, T1p };
enum class VRegion { V1, V1p, V2, V3 };

inline constexpr std::array<TriangleRegion, 7> kTriangleRegions{
    TriangleRegion::R1, TriangleRegion::R1p, TriangleRegion::R2, TriangleRegion::R2p,
    TriangleRegion::R3, TriangleRegion::R4,  TriangleRegion::R4p};
inline constexpr std::array<ComplementRegion, 4> kComplementRegions{
    ComplementRegion::T1, ComplementRegion::T2, ComplementRegion::T3, ComplementRegion::T1p};
inline constexpr std::array<VRegion, 4> kVRegions{VRegion::V1, VRegion::V1p, VRegion::V2, VRegion::V3};

std::string_view to_string(TriangleRegion r);
std::string_view to_string(ComplementRegion r);
std::string_view to_string(VRegion r);

/// (n1, n2) with n1 <= n2; swapped is set when the input had n1 > n2.
struct NormalizedValuation {
  RootValuation rv;
  bool swapped;
};
NormalizedValuation normalize_gl3(const RootValuation& rv);

/// Sch(2n1+n2,0,0)^T: mu >= 0 at level 2n1+n2, lexicographic.
std::vector<Coweight> triangle_points(const RootValuation& rv);

/// min(n1,mu2) + min(n1,mu3) + min(n2, f(mu2-mu3)), f(x) = x for x >= 0 and
/// |x|-1 for x < 0 (sign(0) = 1).
int cell_dimension(const RootValuation& rv, const Coweight& mu);

/// Every R-predicate that holds at mu; the partition property says one.
std::vector<TriangleRegion> triangle_region_matches(const RootValuation& rv, const Coweight& mu);
/// Throws InvariantViolation unless exactly one predicate holds.
TriangleRegion triangle_region(const RootValuation& rv, const Coweight& mu);

IntPolynomial region_sum_bruteforce(const RootValuation& rv, TriangleRegion label);
IntPolynomial region_sum_closed(const RootValuation& rv, TriangleRegion label);

std::vector<ComplementRegion> complement_region_matches(const RootValuation& rv, const Coweight& mu);
/// nullopt iff mu is a fixed point of F. Throws InvariantViolation on a double match.
std::optional<ComplementRegion> complement_region(const RootValuation& rv, const Coweight& mu);
/// Cell dimension used for the T-regions: 2n1 + f(mu2-mu3) on T1, T1';
/// n1 + n2 + min(mu2, mu3) on T2, T3.
int complement_exponent(const RootValuation& rv, ComplementRegion label, const Coweight& mu);

IntPolynomial complement_sum_bruteforce(const RootValuation& rv, ComplementRegion label);
IntPolynomial complement_sum_closed(const RootValuation& rv, ComplementRegion label);

/// Seven triangle sums minus four complement sums, in q. Inputs with
/// n1 > n2 are swapped first.
IntPolynomial poincare_pipeline(const RootValuation& rv);

/// The four-sum closed form, in t. Inputs with n1 > n2 are swapped first.
IntPolynomial closed_form(const RootValuation& rv);
IntPolynomial closed_form(int n1, int n2);

/// Fixed points of F: mu >= 0 at level 2n1+n2, mu1 <= 2n1, mu2, mu3 <= n1+n2.
/// Lexicographic. Requires n1 <= n2.
std::vector<Coweight> fundamental_fixed_points(const RootValuation& rv);

std::vector<VRegion> v_region_matches(const RootValuation& rv, const Coweight& mu);

struct VAssignment {
  VRegion label;
  bool overlap;  // both V1 and V1' hold; V1 wins
};
/// Throws InvariantViolation when no predicate holds or when a pair other
/// than (V1, V1') holds.
VAssignment v_region(const RootValuation& rv, const Coweight& mu);

struct VPartitionReport {
  std::vector<std::pair<Coweight, VRegion>> labelled;
  std::vector<Coweight> overlap;
  std::vector<Coweight> gaps;
};
/// Runs the V-predicates over every fixed point without throwing.
VPartitionReport v_partition(const RootValuation& rv);

}  // namespace fundom
