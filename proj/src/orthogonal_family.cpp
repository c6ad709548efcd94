#include "fundom/orthogonal_family.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fundom {

OrthogonalFamily::OrthogonalFamily(int rank, std::map<WeylElem, Coweight> vertices)
    : rank_(rank), level_(0), vertices_(std::move(vertices)) {
  const auto expected = WeylElem::all(rank);
  if (vertices_.size() != expected.size()) {
    throw std::invalid_argument("orthogonal family needs one vertex per Weyl element");
  }
  bool first = true;
  for (const auto& w : expected) {
    auto it = vertices_.find(w);
    if (it == vertices_.end()) throw std::invalid_argument("missing vertex for " + w.one_line());
    if (it->second.rank() != rank) throw std::invalid_argument("vertex rank mismatch");
    if (first) {
      level_ = it->second.level();
      first = false;
    } else if (it->second.level() != level_) {
      throw std::invalid_argument("vertices of a family must share one level");
    }
  }
}

const Coweight& OrthogonalFamily::vertex(const WeylElem& sigma) const {
  auto it = vertices_.find(sigma);
  if (it == vertices_.end()) throw std::out_of_range("no vertex for " + sigma.one_line());
  return it->second;
}

OrthogonalFamily OrthogonalFamily::translated(const Coweight& chi) const {
  std::map<WeylElem, Coweight> moved;
  for (const auto& [w, v] : vertices_) moved.emplace(w, v + chi);
  return OrthogonalFamily(rank_, std::move(moved));
}

Coweight regular_vertex(const RootValuation& rv, const WeylElem& sigma) {
  const int d = rv.rank();
  if (sigma.rank() != d) throw std::invalid_argument("rank mismatch in regular_vertex");
  Coweight nu(std::vector<int>(static_cast<std::size_t>(d), 0));
  for (int i = 0; i < d; ++i) {
    int s = 0;
    for (int j = 0; j < i; ++j) s += rv.val(sigma(i), sigma(j));
    nu[sigma(i)] = s;
  }
  return nu;
}

OrthogonalFamily regular_family(const RootValuation& rv) {
  std::map<WeylElem, Coweight> verts;
  for (const auto& w : WeylElem::all(rv.rank())) verts.emplace(w, regular_vertex(rv, w));
  return OrthogonalFamily(rv.rank(), std::move(verts));
}

int adjacency_constant(const OrthogonalFamily& fam, const WeylElem& sigma, int k) {
  const int d = fam.rank();
  const WeylElem neighbour = sigma * WeylElem::simple_reflection(d, k);
  const Coweight diff = fam.vertex(sigma) - fam.vertex(neighbour);
  const int plus = sigma(k + 1);
  const int minus = sigma(k);
  for (int i = 0; i < d; ++i) {
    if (i != plus && i != minus && diff[i] != 0) {
      throw InvariantViolation("vertex difference is not along the separating coroot at " + sigma.one_line());
    }
  }
  if (diff[plus] != -diff[minus] || diff[plus] < 0) {
    throw InvariantViolation("vertex difference is not a nonnegative coroot multiple at " + sigma.one_line());
  }
  return diff[plus];
}

MaximalParabolic::MaximalParabolic(int rank, std::vector<int> upper_block)
    : upper_(std::move(upper_block)), in_upper_(static_cast<std::size_t>(rank), false) {
  std::sort(upper_.begin(), upper_.end());
  if (upper_.empty() || static_cast<int>(upper_.size()) >= rank) {
    throw std::invalid_argument("a maximal parabolic needs a proper nonempty block");
  }
  for (int a : upper_) {
    if (a < 0 || a >= rank || in_upper_[static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("bad parabolic block");
    }
    in_upper_[static_cast<std::size_t>(a)] = true;
  }
}

MaximalParabolic MaximalParabolic::standard(int rank, int k) {
  std::vector<int> s;
  for (int i = 0; i < k; ++i) s.push_back(i);
  return MaximalParabolic(rank, std::move(s));
}

std::vector<MaximalParabolic> MaximalParabolic::all(int rank) {
  std::vector<std::vector<int>> blocks;
  for (unsigned mask = 1; mask + 1 < (1u << rank); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < rank; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    blocks.push_back(std::move(s));
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<MaximalParabolic> out;
  for (auto& s : blocks) out.emplace_back(rank, std::move(s));
  return out;
}

MaximalParabolic MaximalParabolic::opposite() const {
  std::vector<int> rest;
  for (int i = 0; i < rank(); ++i) {
    if (!in_upper(i)) rest.push_back(i);
  }
  return MaximalParabolic(rank(), std::move(rest));
}

std::vector<Rational> MaximalParabolic::weight() const {
  const Rational shift(static_cast<std::int64_t>(upper_.size()), rank());
  std::vector<Rational> w(static_cast<std::size_t>(rank()), -shift);
  for (int a : upper_) w[static_cast<std::size_t>(a)] += 1;
  return w;
}

Rational MaximalParabolic::pair(const Coweight& x) const {
  if (x.rank() != rank()) throw std::invalid_argument("rank mismatch in pairing");
  const auto w = weight();
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) s += w[static_cast<std::size_t>(i)] * x[i];
  return s;
}

bool MaximalParabolic::contains_borel(const WeylElem& sigma) const {
  // Positive roots of sigma.B^- are alpha_{sigma(i) sigma(j)}, i > j, so S must
  // fill the last |S| positions of sigma.
  const int d = rank();
  const int k = static_cast<int>(upper_.size());
  for (int i = d - k; i < d; ++i) {
    if (!in_upper(sigma(i))) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> MaximalParabolic::unipotent_roots() const {
  std::vector<std::pair<int, int>> roots;
  for (int a : upper_) {
    for (int b = 0; b < rank(); ++b) {
      if (!in_upper(b)) roots.emplace_back(a, b);
    }
  }
  return roots;
}

std::string MaximalParabolic::label() const {
  std::ostringstream os;
  auto block = [&](bool upper) {
    os << '{';
    bool first = true;
    for (int i = 0; i < rank(); ++i) {
      if (in_upper(i) != upper) continue;
      os << (first ? "" : ",") << i + 1;
      first = false;
    }
    os << '}';
  };
  block(true);
  os << '|';
  block(false);
  return os.str();
}

namespace {

const Coweight& some_vertex_in(const OrthogonalFamily& fam, const MaximalParabolic& p) {
  for (const auto& [w, v] : fam.vertices()) {
    if (p.contains_borel(w)) return v;
  }
  throw std::logic_error("no Borel inside parabolic " + p.label());
}

}  // namespace

Rational face_distance(const OrthogonalFamily& fam, const MaximalParabolic& p) {
  if (p.rank() != fam.rank()) throw std::invalid_argument("rank mismatch in face_distance");
  return p.pair(some_vertex_in(fam, p)) - p.pair(some_vertex_in(fam, p.opposite()));
}

int unipotent_valuation_sum(const RootValuation& rv, const MaximalParabolic& p) {
  int s = 0;
  for (auto [a, b] : p.unipotent_roots()) s += rv.val(a, b);
  return s;
}

LatticePolytopeView::LatticePolytopeView(OrthogonalFamily fam) : fam_(std::move(fam)) {
  for (auto& p : MaximalParabolic::all(fam_.rank())) {
    const Rational bound = p.pair(some_vertex_in(fam_, p));
    halves_.push_back({std::move(p), bound});
  }
}

bool LatticePolytopeView::contains(const Coweight& x) const {
  if (x.level() != fam_.common_level()) throw std::invalid_argument("point is not at the family's level");
  return std::all_of(halves_.begin(), halves_.end(),
                     [&](const HalfSpace& h) { return h.parabolic.pair(x) <= h.bound; });
}

SchubertParams schubert_params(const RootValuation& rv) {
  if (!rv.sorted()) throw std::invalid_argument("schubert_params requires n_1 <= ... <= n_{d-1}");
  const int d = rv.rank();
  Coweight mu(std::vector<int>(static_cast<std::size_t>(d), 0));
  Coweight lambda(std::vector<int>(static_cast<std::size_t>(d), 0));
  for (int i = 1; i < d; ++i) mu[i] = mu[i - 1] + rv.n(i - 1);
  for (int i = 0; i < d; ++i) {
    // lambda_i = n_1 + ... + n_{i-1} + (d-i) n_i in 1-based indexing.
    lambda[i] = mu[i] + (i + 1 < d ? (d - 1 - i) * rv.n(i) : 0);
  }
  return {std::move(mu), std::move(lambda)};
}

bool hexagon_membership(const RootValuation& rv, const Coweight& mu) {
  if (rv.rank() != 3 || mu.rank() != 3) throw std::invalid_argument("hexagon_membership is for GL_3");
  if (!rv.sorted()) throw std::invalid_argument("hexagon_membership requires n1 <= n2");
  const int n1 = rv.n(0);
  const int n2 = rv.n(1);
  if (mu.level() != 2 * n1 + n2) throw std::invalid_argument("point is not at level 2n1+n2");
  return mu[0] >= 0 && mu[1] >= 0 && mu[2] >= 0 && mu[0] <= 2 * n1 && mu[1] <= n1 + n2 && mu[2] <= n1 + n2;
}

}  // namespace fundom
