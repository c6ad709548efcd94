#include "fundom/weyl_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fundom {

RootValuation::RootValuation(std::vector<int> simple_vals) : simple_(std::move(simple_vals)) {
  if (simple_.empty()) throw std::invalid_argument("root valuation needs rank >= 2");
  for (int v : simple_) {
    if (v < 1) throw std::invalid_argument("root valuations must be positive");
  }
}

int RootValuation::val(int i, int j) const {
  if (i == j) throw std::invalid_argument("val(alpha_ii) is undefined");
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  if (lo < 0 || hi >= rank()) throw std::out_of_range("root index out of range");
  return *std::min_element(simple_.begin() + lo, simple_.begin() + hi);
}

bool RootValuation::sorted() const { return std::is_sorted(simple_.begin(), simple_.end()); }

RootValuation RootValuation::swapped() const {
  std::vector<int> r(simple_.rbegin(), simple_.rend());
  return RootValuation(std::move(r));
}

std::vector<std::vector<int>> valuation_matrix(const RootValuation& rv) {
  const int d = rv.rank();
  std::vector<std::vector<int>> v(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d), 0));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      v[i][j] = v[j][i] = rv.val(i, j);
    }
  }
  return v;
}

int Coweight::level() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

Coweight Coweight::operator+(const Coweight& other) const {
  if (other.rank() != rank()) throw std::invalid_argument("coweight rank mismatch");
  Coweight r = *this;
  for (int i = 0; i < rank(); ++i) r[i] += other[i];
  return r;
}

Coweight Coweight::operator-(const Coweight& other) const {
  if (other.rank() != rank()) throw std::invalid_argument("coweight rank mismatch");
  Coweight r = *this;
  for (int i = 0; i < rank(); ++i) r[i] -= other[i];
  return r;
}

std::string Coweight::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << coords_[static_cast<std::size_t>(i)];
  os << ')';
  return os.str();
}

WeylElem::WeylElem(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= rank() || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

WeylElem WeylElem::identity(int d) {
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  return WeylElem(std::move(p));
}

WeylElem WeylElem::longest(int d) {
  std::vector<int> p(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = d - 1 - i;
  return WeylElem(std::move(p));
}

WeylElem WeylElem::simple_reflection(int d, int k) {
  if (k < 0 || k + 1 >= d) throw std::out_of_range("simple reflection index");
  auto p = identity(d).perm_;
  std::swap(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k + 1)]);
  return WeylElem(std::move(p));
}

std::vector<WeylElem> WeylElem::all(int d) {
  std::vector<WeylElem> out;
  auto p = identity(d).perm_;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

WeylElem WeylElem::operator*(const WeylElem& other) const {
  if (other.rank() != rank()) throw std::invalid_argument("Weyl element rank mismatch");
  std::vector<int> p(perm_.size());
  for (int i = 0; i < rank(); ++i) p[static_cast<std::size_t>(i)] = (*this)(other(i));
  return WeylElem(std::move(p));
}

WeylElem WeylElem::inverse() const {
  std::vector<int> p(perm_.size());
  for (int i = 0; i < rank(); ++i) p[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] = i;
  return WeylElem(std::move(p));
}

std::string WeylElem::one_line() const {
  std::ostringstream os;
  for (int i = 0; i < rank(); ++i) {
    if (rank() > 9 && i) os << ',';
    os << perm_[static_cast<std::size_t>(i)] + 1;
  }
  return os.str();
}

Coweight weyl_apply(const WeylElem& w, const Coweight& mu) {
  if (w.rank() != mu.rank()) throw std::invalid_argument("rank mismatch in weyl_apply");
  Coweight r(std::vector<int>(static_cast<std::size_t>(mu.rank()), 0));
  for (int i = 0; i < mu.rank(); ++i) r[w(i)] = mu[i];
  return r;
}

}  // namespace fundom
