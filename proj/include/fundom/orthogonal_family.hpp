#pragma once

// (G,T)-orthogonal families of coweights for GL_d, the regular-point family
// H_{B'}(x0), maximal-parabolic face functionals and the Schubert truncation
// data used to cut out the fundamental domain.
//
// Vertex convention: a family is keyed by sigma with B' = sigma . B^-, where B^-
// is the lower-triangular Borel. Two Borels sigma.B^- and sigma.s_k.B^- are
// adjacent; the coroot positive for the first is e_{sigma(k+1)} - e_{sigma(k)}.
// Parabolic-side code (ak_reduction) uses B' = w'.B instead, w' = sigma.w0.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "fundom/weyl_lattice.hpp"

namespace fundom {

using Rational = boost::rational<std::int64_t>;

class OrthogonalFamily {
 public:
  /// Requires a vertex for every sigma in S_d, all at one level. Orthogonality
  /// is not checked here; adjacency_constant reports violations.
  OrthogonalFamily(int rank, std::map<WeylElem, Coweight> vertices);

  int rank() const { return rank_; }
  int common_level() const { return level_; }
  const Coweight& vertex(const WeylElem& sigma) const;
  const std::map<WeylElem, Coweight>& vertices() const { return vertices_; }

  /// Same family translated by chi (changes the level by chi.level()).
  OrthogonalFamily translated(const Coweight& chi) const;

 private:
  int rank_;
  int level_;
  std::map<WeylElem, Coweight> vertices_;
};

/// H_{sigma B^-}(x0): nu_{sigma(i)} = sum_{j<i} val(alpha_{sigma(i),sigma(j)}).
Coweight regular_vertex(const RootValuation& rv, const WeylElem& sigma);
OrthogonalFamily regular_family(const RootValuation& rv);

/// The c >= 0 with lambda_{sigma} - lambda_{sigma s_k} = c (e_{sigma(k+1)} - e_{sigma(k)}).
/// Throws InvariantViolation when the difference is not such a multiple.
int adjacency_constant(const OrthogonalFamily& fam, const WeylElem& sigma, int k);

/// A maximal parabolic P containing T, given by its upper block S: the roots
/// of the unipotent radical are alpha_{ab} with a in S, b not in S.
/// The standard P_k (containing the upper-triangular B) has S = {1..k}.
class MaximalParabolic {
 public:
  MaximalParabolic(int rank, std::vector<int> upper_block);
  static MaximalParabolic standard(int rank, int k);
  /// All 2^d - 2 maximal parabolics, ordered by block size then lexicographically.
  static std::vector<MaximalParabolic> all(int rank);

  int rank() const { return static_cast<int>(in_upper_.size()); }
  const std::vector<int>& upper_block() const { return upper_; }
  bool in_upper(int i) const { return in_upper_[static_cast<std::size_t>(i)]; }
  MaximalParabolic opposite() const;

  /// varpi_P = e_S - (|S|/d)(1,...,1); pairs to 1 with every coroot of N_P.
  std::vector<Rational> weight() const;
  Rational pair(const Coweight& x) const;

  /// Whether sigma.B^- lies in P.
  bool contains_borel(const WeylElem& sigma) const;
  /// Phi(N_P, T) as pairs (a, b) meaning alpha_{ab}.
  std::vector<std::pair<int, int>> unipotent_roots() const;

  /// "{1}|{2,3}" (1-based, upper block first).
  std::string label() const;

  friend bool operator==(const MaximalParabolic& a, const MaximalParabolic& b) { return a.upper_ == b.upper_ && a.rank() == b.rank(); }

 private:
  std::vector<int> upper_;
  std::vector<bool> in_upper_;
};

/// <varpi_P, lambda_{B'}> - <varpi_P, lambda_{B''}> for B' in P, B'' in P^-.
Rational face_distance(const OrthogonalFamily& fam, const MaximalParabolic& p);

/// sum of val(alpha) over Phi(N_P, T).
int unipotent_valuation_sum(const RootValuation& rv, const MaximalParabolic& p);

/// Half-space description of an orthogonal family's convex hull, per level.
class LatticePolytopeView {
 public:
  struct HalfSpace {
    MaximalParabolic parabolic;
    Rational bound;  // <varpi_P, x> <= bound
  };

  explicit LatticePolytopeView(OrthogonalFamily fam);

  const OrthogonalFamily& family() const { return fam_; }
  const std::vector<HalfSpace>& half_spaces() const { return halves_; }
  /// Throws std::invalid_argument if x is not at the family's level.
  bool contains(const Coweight& x) const;

 private:
  OrthogonalFamily fam_;
  std::vector<HalfSpace> halves_;
};

struct SchubertParams {
  Coweight mu;
  Coweight lambda;
};

/// mu = (0, n1, n1+n2, ...), lambda_i = sum_{j != i} val(alpha_{ji}).
/// Requires n_1 <= ... <= n_{d-1}.
SchubertParams schubert_params(const RootValuation& rv);

/// Box form of Ec(x0) for GL_3 (n1 <= n2): mu >= 0, mu1 <= 2n1,
/// mu2, mu3 <= n1+n2, at level 2n1+n2.
bool hexagon_membership(const RootValuation& rv, const Coweight& mu);

}  // namespace fundom
