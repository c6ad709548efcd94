#include "fundom/ak_reduction.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fundom {

namespace {

constexpr int kRank = 3;
using Vec = std::array<std::int64_t, kRank>;

void require_gl3(const RootValuation& rv, const Coweight& mu) {
  if (rv.rank() != kRank || mu.rank() != kRank) {
    throw std::invalid_argument("Arthur-Kottwitz classification is implemented for GL_3");
  }
}

// Scaled projection of a coweight: S * (d*mu - level*1).
Vec project(const Coweight& mu, std::int64_t scale) {
  Vec v{};
  const std::int64_t level = mu.level();
  for (int i = 0; i < kRank; ++i) v[static_cast<std::size_t>(i)] = scale * (kRank * std::int64_t{mu[i]} - level);
  return v;
}

// Strict comparison that refuses ties: a tie means the perturbation failed.
bool less_strict(std::int64_t a, std::int64_t b) {
  if (a == b) throw InvariantViolation("lattice point on a region wall after xi-perturbation");
  return a < b;
}

std::int64_t root(const Vec& x, int a, int b) { return x[static_cast<std::size_t>(a)] - x[static_cast<std::size_t>(b)]; }

// d * <varpi_P, x> on the integer lattice.
std::int64_t varpi_scaled(const MaximalParabolic& p, const Vec& x) {
  std::int64_t s = 0;
  const std::int64_t size = static_cast<std::int64_t>(p.upper_block().size());
  for (int i = 0; i < kRank; ++i) {
    s += ((p.in_upper(i) ? kRank : 0) - size) * x[static_cast<std::size_t>(i)];
  }
  return s;
}

// 2 * pi_M(x): the Levi pair's coordinates replaced by their sum.
Vec doubled_levi_projection(const Vec& x, int i, int j) {
  Vec r{};
  for (int l = 0; l < kRank; ++l) r[static_cast<std::size_t>(l)] = 2 * x[static_cast<std::size_t>(l)];
  const std::int64_t s = x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(j)];
  r[static_cast<std::size_t>(i)] = s;
  r[static_cast<std::size_t>(j)] = s;
  return r;
}

}  // namespace

ParabolicLabel ParabolicLabel::full() { return {}; }

ParabolicLabel ParabolicLabel::maximal(const MaximalParabolic& p) {
  ParabolicLabel l;
  l.kind = Kind::Maximal;
  l.upper_block = p.upper_block();
  return l;
}

ParabolicLabel ParabolicLabel::borel_of(const WeylElem& w_prime) {
  ParabolicLabel l;
  l.kind = Kind::Borel;
  l.borel = w_prime.perm();
  return l;
}

std::vector<ParabolicLabel> ParabolicLabel::all_gl3() {
  std::vector<ParabolicLabel> out{full()};
  for (const auto& p : MaximalParabolic::all(kRank)) out.push_back(maximal(p));
  for (const auto& w : WeylElem::all(kRank)) out.push_back(borel_of(w));
  return out;
}

MaximalParabolic ParabolicLabel::parabolic(int rank) const {
  if (kind != Kind::Maximal) throw std::logic_error("label is not a maximal parabolic");
  return MaximalParabolic(rank, upper_block);
}

WeylElem ParabolicLabel::borel_elem() const {
  if (kind != Kind::Borel) throw std::logic_error("label is not a Borel");
  return WeylElem(borel);
}

std::string ParabolicLabel::str() const {
  switch (kind) {
    case Kind::Full:
      return "G";
    case Kind::Maximal:
      return "P" + parabolic(kRank).label();
    case Kind::Borel:
      return "B[" + borel_elem().one_line() + "]";
  }
  return {};
}

AkPartition::AkPartition(const RootValuation& rv) : rv_(rv), weyl_(WeylElem::all(kRank)) {
  if (rv.rank() != kRank) throw std::invalid_argument("Arthur-Kottwitz classification is implemented for GL_3");
  const WeylElem w0 = WeylElem::longest(kRank);
  const Coweight xi_hat{kRank - 1, kRank - 3, 1 - kRank};
  for (const auto& w : weyl_) {
    Coweight h = regular_vertex(rv_, w * w0);
    Vertex v{project(h, 1), {}};
    const Coweight xi = weyl_apply(w, xi_hat);
    for (int i = 0; i < kRank; ++i) {
      v.xi[static_cast<std::size_t>(i)] = xi[i];
      max_vertex_coord_ = std::max(max_vertex_coord_, std::abs(h[i]));
    }
    h_.push_back(std::move(h));
    verts_.push_back(v);
  }
  maximal_ = MaximalParabolic::all(kRank);
  for (const auto& p : maximal_) {
    // B' = w'.B lies in P iff the upper block fills the first |S| positions of w'.
    std::vector<std::size_t> inside;
    const int k = static_cast<int>(p.upper_block().size());
    for (std::size_t idx = 0; idx < weyl_.size(); ++idx) {
      bool ok = true;
      for (int i = 0; i < k; ++i) ok = ok && p.in_upper(weyl_[idx](i));
      if (ok) inside.push_back(idx);
    }
    borels_in_.push_back(std::move(inside));
  }
}

std::int64_t AkPartition::scale_for(const Coweight& mu) const {
  require_gl3(rv_, mu);
  int m = max_vertex_coord_;
  for (int i = 0; i < kRank; ++i) m = std::max(m, std::abs(mu[i]));
  return 2 * kRank * (std::int64_t{m} + 1);
}

const Coweight& AkPartition::unperturbed_vertex(const WeylElem& w_prime) const {
  auto it = std::lower_bound(weyl_.begin(), weyl_.end(), w_prime);
  if (it == weyl_.end() || *it != w_prime) throw std::out_of_range("not a GL_3 Weyl element");
  return h_[static_cast<std::size_t>(it - weyl_.begin())];
}

Vec AkPartition::vertex(std::size_t w_index, std::int64_t scale) const {
  const Vertex& v = verts_[w_index];
  Vec r{};
  for (std::size_t i = 0; i < kRank; ++i) r[i] = scale * v.projected[i] + v.xi[i];
  return r;
}

bool AkPartition::in_full(const Vec& a, std::int64_t scale) const {
  for (std::size_t p = 0; p < maximal_.size(); ++p) {
    for (std::size_t w : borels_in_[p]) {
      if (less_strict(varpi_scaled(maximal_[p], vertex(w, scale)), varpi_scaled(maximal_[p], a))) return false;
    }
  }
  return true;
}

bool AkPartition::in_borel(std::size_t w_index, const Vec& a, std::int64_t scale) const {
  const WeylElem& w = weyl_[w_index];
  const Vec lambda = vertex(w_index, scale);
  for (int i = 0; i < kRank; ++i) {
    for (int j = i + 1; j < kRank; ++j) {
      if (less_strict(root(a, w(i), w(j)), root(lambda, w(i), w(j)))) return false;
    }
  }
  return true;
}

bool AkPartition::in_maximal(std::size_t p_index, const Vec& a, std::int64_t scale) const {
  const MaximalParabolic& p = maximal_[p_index];
  // Levi of P is GL_2 x GL_1; (i, j) is the GL_2 pair.
  std::vector<int> pair;
  const bool pair_is_upper = p.upper_block().size() == 2;
  for (int l = 0; l < kRank; ++l) {
    if (p.in_upper(l) == pair_is_upper) pair.push_back(l);
  }
  const int i = pair[0];
  const int j = pair[1];
  const auto& borels = borels_in_[p_index];

  // pi^M(a) in the face D0^P: the Levi-root coordinate lies between the two
  // endpoints of the edge.
  const std::int64_t e0 = root(vertex(borels[0], scale), i, j);
  const std::int64_t e1 = root(vertex(borels[1], scale), i, j);
  const std::int64_t x = root(a, i, j);
  if (less_strict(x, std::min(e0, e1)) || less_strict(std::max(e0, e1), x)) return false;

  // alpha(pi_M(a)) >= alpha(pi_M(lambda_{B'})) for alpha in Phi(N_P), B' in P.
  const Vec pa = doubled_levi_projection(a, i, j);
  for (std::size_t w : borels) {
    const Vec pl = doubled_levi_projection(vertex(w, scale), i, j);
    for (auto [s, t] : p.unipotent_roots()) {
      if (less_strict(root(pa, s, t), root(pl, s, t))) return false;
    }
  }
  return true;
}

bool AkPartition::contains(const ParabolicLabel& label, const Coweight& mu, std::int64_t scale_factor) const {
  require_gl3(rv_, mu);
  if (scale_factor < 1) throw std::invalid_argument("scale factor must be positive");
  const std::int64_t scale = scale_for(mu) * scale_factor;
  const Vec a = project(mu, scale);
  switch (label.kind) {
    case ParabolicLabel::Kind::Full:
      return in_full(a, scale);
    case ParabolicLabel::Kind::Maximal: {
      const auto it = std::find(maximal_.begin(), maximal_.end(), label.parabolic(kRank));
      return in_maximal(static_cast<std::size_t>(it - maximal_.begin()), a, scale);
    }
    case ParabolicLabel::Kind::Borel: {
      const auto it = std::lower_bound(weyl_.begin(), weyl_.end(), label.borel_elem());
      return in_borel(static_cast<std::size_t>(it - weyl_.begin()), a, scale);
    }
  }
  return false;
}

ParabolicLabel AkPartition::classify(const Coweight& mu, std::int64_t scale_factor) const {
  require_gl3(rv_, mu);
  const std::int64_t scale = scale_for(mu) * scale_factor;
  const Vec a = project(mu, scale);
  std::vector<ParabolicLabel> hits;
  if (in_full(a, scale)) hits.push_back(ParabolicLabel::full());
  for (std::size_t p = 0; p < maximal_.size(); ++p) {
    if (in_maximal(p, a, scale)) hits.push_back(ParabolicLabel::maximal(maximal_[p]));
  }
  for (std::size_t w = 0; w < weyl_.size(); ++w) {
    if (in_borel(w, a, scale)) hits.push_back(ParabolicLabel::borel_of(weyl_[w]));
  }
  if (hits.size() != 1) {
    std::ostringstream os;
    os << "point " << mu.str() << " lies in " << hits.size() << " regions";
    for (const auto& h : hits) os << ' ' << h.str();
    throw InvariantViolation(os.str());
  }
  return hits.front();
}

std::int64_t tie_break_scale(const RootValuation& rv, const Coweight& mu) { return AkPartition(rv).scale_for(mu); }

bool ak_region_contains(const RootValuation& rv, const ParabolicLabel& label, const Coweight& mu,
                        std::int64_t scale_factor) {
  return AkPartition(rv).contains(label, mu, scale_factor);
}

ParabolicLabel ak_classify(const RootValuation& rv, const Coweight& mu, std::int64_t scale_factor) {
  return AkPartition(rv).classify(mu, scale_factor);
}

std::vector<int> levi_component(const ParabolicLabel& label, const Coweight& mu) {
  switch (label.kind) {
    case ParabolicLabel::Kind::Full:
      return {mu.level()};
    case ParabolicLabel::Kind::Maximal: {
      const auto p = label.parabolic(mu.rank());
      int upper = 0;
      for (int a : p.upper_block()) upper += mu[a];
      return {upper, mu.level() - upper};
    }
    case ParabolicLabel::Kind::Borel:
      return mu.coords();
  }
  return {};
}

std::vector<Coweight> window_points(const ClassificationWindow& window) {
  std::vector<Coweight> out;
  const int b = window.bound;
  for (int x = -b; x <= b; ++x) {
    for (int y = -b; y <= b; ++y) {
      const int z = window.level - x - y;
      if (z >= -b && z <= b) out.push_back(Coweight{x, y, z});
    }
  }
  return out;
}

std::vector<StratumGroup> stratum_fixed_points(const RootValuation& rv, const ParabolicLabel& label,
                                               const ClassificationWindow& window) {
  const AkPartition partition(rv);
  std::map<std::vector<int>, std::vector<Coweight>> groups;
  for (const auto& mu : window_points(window)) {
    if (partition.classify(mu) == label) groups[levi_component(label, mu)].push_back(mu);
  }
  std::vector<StratumGroup> out;
  for (auto& [nu, pts] : groups) out.push_back({nu, std::move(pts)});
  return out;
}

std::vector<ParabolicLabel> translate_face_labels(const RootValuation& rv, const Coweight& chi) {
  const AkPartition partition(rv);
  auto face_inside = [&](const ParabolicLabel& label, const std::vector<WeylElem>& w_primes) {
    return std::all_of(w_primes.begin(), w_primes.end(), [&](const WeylElem& w) {
      return partition.contains(label, partition.unperturbed_vertex(w) + chi);
    });
  };
  std::vector<ParabolicLabel> out;
  for (const auto& label : ParabolicLabel::all_gl3()) {
    std::vector<WeylElem> face;
    switch (label.kind) {
      case ParabolicLabel::Kind::Full:
        face = WeylElem::all(kRank);
        break;
      case ParabolicLabel::Kind::Maximal:
        {
          // w'.B lies in P iff the upper block fills the first |S| positions of w'.
          const auto p = label.parabolic(kRank);
          const int k = static_cast<int>(p.upper_block().size());
          for (const auto& w : WeylElem::all(kRank)) {
            bool ok = true;
            for (int i = 0; i < k; ++i) ok = ok && p.in_upper(w(i));
            if (ok) face.push_back(w);
          }
        }
        break;
      case ParabolicLabel::Kind::Borel:
        face = {label.borel_elem()};
        break;
    }
    if (face_inside(label, face)) out.push_back(label);
  }
  return out;
}

}  // namespace fundom
