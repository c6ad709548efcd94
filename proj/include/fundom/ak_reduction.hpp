#pragma once

// Arthur-Kottwitz partition of a_T^G into regions R_P (P ranging over the 13
// parabolic subgroups of GL_3 containing T) and the induced classification of
// T-fixed points.
//
// Borel labels here use w' with B' = w'.B (B upper triangular). The vertex of
// D0 attached to B' is H_{B'}(x0) + w'.xi; H_{B'} is regular_vertex at
// sigma = w'.w0.
//
// xi is realised exactly: every point is projected to a_T^G as
// d*mu - level(mu)*(1,...,1), multiplied by an integer scale S, and the
// vertices receive w'.xi_hat with xi_hat = (d-1, d-3, ..., 1-d) added once.
// With S >= 2d no lattice point sits on a wall of any region.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fundom/orthogonal_family.hpp"
#include "fundom/weyl_lattice.hpp"

namespace fundom {

struct ParabolicLabel {
  enum class Kind { Full, Maximal, Borel };

  Kind kind = Kind::Full;
  std::vector<int> upper_block;  // Maximal: 0-based block S
  std::vector<int> borel;        // Borel: one-line w' (0-based), B' = w'.B

  static ParabolicLabel full();
  static ParabolicLabel maximal(const MaximalParabolic& p);
  static ParabolicLabel borel_of(const WeylElem& w_prime);
  /// The 13 labels for GL_3: Full, six maximal, six Borel.
  static std::vector<ParabolicLabel> all_gl3();

  MaximalParabolic parabolic(int rank) const;
  WeylElem borel_elem() const;

  /// "G", "P{1}|{2,3}", "B[213]".
  std::string str() const;

  friend auto operator<=>(const ParabolicLabel&, const ParabolicLabel&) = default;
  friend bool operator==(const ParabolicLabel&, const ParabolicLabel&) = default;
};

/// The 13 regions for one root valuation, with the unperturbed D0 vertices
/// cached. Cheap to copy; immutable.
class AkPartition {
 public:
  explicit AkPartition(const RootValuation& rv);

  const RootValuation& valuation() const { return rv_; }

  /// Default scale S = 2d(M+1), M the largest coordinate magnitude among mu
  /// and the vertices of the regular family.
  std::int64_t scale_for(const Coweight& mu) const;

  /// scale_factor multiplies the default scale (finer perturbation); the
  /// answer must not depend on it.
  bool contains(const ParabolicLabel& label, const Coweight& mu, std::int64_t scale_factor = 1) const;
  ParabolicLabel classify(const Coweight& mu, std::int64_t scale_factor = 1) const;

  /// H_{B'}(x0) for B' = w'.B.
  const Coweight& unperturbed_vertex(const WeylElem& w_prime) const;

 private:
  struct Vertex {
    std::array<std::int64_t, 3> projected;  // d*H - level*1
    std::array<std::int64_t, 3> xi;         // w'.xi_hat
  };
  std::array<std::int64_t, 3> vertex(std::size_t w_index, std::int64_t scale) const;
  bool in_full(const std::array<std::int64_t, 3>& a, std::int64_t scale) const;
  bool in_borel(std::size_t w_index, const std::array<std::int64_t, 3>& a, std::int64_t scale) const;
  bool in_maximal(std::size_t p_index, const std::array<std::int64_t, 3>& a, std::int64_t scale) const;

  RootValuation rv_;
  std::vector<WeylElem> weyl_;                  // lexicographic
  std::vector<Coweight> h_;                     // indexed like weyl_
  std::vector<Vertex> verts_;                   // indexed like weyl_
  std::vector<MaximalParabolic> maximal_;       // MaximalParabolic::all(3)
  std::vector<std::vector<std::size_t>> borels_in_;  // per maximal parabolic
  int max_vertex_coord_ = 0;
};

std::int64_t tie_break_scale(const RootValuation& rv, const Coweight& mu);

/// Whether mu projects into R_P. scale_factor multiplies the default scale
/// (finer perturbation); the answer must not depend on it.
bool ak_region_contains(const RootValuation& rv, const ParabolicLabel& label, const Coweight& mu,
                        std::int64_t scale_factor = 1);

/// The unique label whose region contains mu. Throws InvariantViolation if
/// zero or several regions claim the point.
ParabolicLabel ak_classify(const RootValuation& rv, const Coweight& mu, std::int64_t scale_factor = 1);

struct ClassificationWindow {
  int level;
  int bound;  // |mu_i| <= bound
};

struct StratumGroup {
  std::vector<int> nu;  // component in Lambda_{M_P}: block sums of mu
  std::vector<Coweight> points;
};

/// Lambda_{M_P}-component of mu: (level) for G, the two block sums for a
/// maximal parabolic (upper block first), mu itself for a Borel.
std::vector<int> levi_component(const ParabolicLabel& label, const Coweight& mu);

/// Lattice points of the window classified to P, grouped by nu; groups and
/// points are in lexicographic order.
std::vector<StratumGroup> stratum_fixed_points(const RootValuation& rv, const ParabolicLabel& label,
                                               const ClassificationWindow& window);

/// Every lattice point of the window, lexicographic.
std::vector<Coweight> window_points(const ClassificationWindow& window);

/// Labels P for which the face Ec^P of the translated regular hexagon
/// Ec(x0) + chi lies inside R_P. Exactly one is expected for every chi.
std::vector<ParabolicLabel> translate_face_labels(const RootValuation& rv, const Coweight& chi);

}  // namespace fundom
