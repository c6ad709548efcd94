#pragma once

// Root data for GL_d: root valuations, coweights and the symmetric-group action.
//
// Indices are 0-based in storage; anything printed or serialised is 1-based.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace fundom {

/// Raised when an internal consistency check fails (a partition with a gap,
/// an orthogonality violation, an unresolved tie). Never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Root valuation (n_1, ..., n_{d-1}) of a regular element in minimal form.
class RootValuation {
 public:
  explicit RootValuation(std::vector<int> simple_vals);
  RootValuation(std::initializer_list<int> simple_vals)
      : RootValuation(std::vector<int>(simple_vals)) {}

  int rank() const { return static_cast<int>(simple_.size()) + 1; }
  const std::vector<int>& simple_vals() const { return simple_; }
  int n(int i) const { return simple_.at(static_cast<std::size_t>(i)); }

  /// val(alpha_{ij}) = min of n_l over l in [min(i,j), max(i,j)-1]; i != j.
  int val(int i, int j) const;

  bool sorted() const;

  /// (n_2, n_1) for d = 3, i.e. the data of F_{n2,n1}.
  RootValuation swapped() const;

  friend bool operator==(const RootValuation&, const RootValuation&) = default;

 private:
  std::vector<int> simple_;
};

/// Full symmetric valuation matrix; the diagonal is stored as 0 and is meaningless.
std::vector<std::vector<int>> valuation_matrix(const RootValuation& rv);

/// A point of X_*(T) = Z^d.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Coweight(std::initializer_list<int> coords) : coords_(coords) {}

  int rank() const { return static_cast<int>(coords_.size()); }
  int level() const;
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return coords_; }

  Coweight operator+(const Coweight& other) const;
  Coweight operator-(const Coweight& other) const;

  /// "(a,b,c)"
  std::string str() const;

  friend auto operator<=>(const Coweight&, const Coweight&) = default;
  friend bool operator==(const Coweight&, const Coweight&) = default;

 private:
  std::vector<int> coords_;
};

/// A permutation sigma of {0, ..., d-1}; perm()[i] = sigma(i).
class WeylElem {
 public:
  explicit WeylElem(std::vector<int> perm);

  static WeylElem identity(int d);
  /// The longest element i -> d-1-i.
  static WeylElem longest(int d);
  /// Simple reflection s_k swapping k and k+1 (0-based k).
  static WeylElem simple_reflection(int d, int k);
  /// Every permutation of rank d in lexicographic order of one-line notation.
  static std::vector<WeylElem> all(int d);

  int rank() const { return static_cast<int>(perm_.size()); }
  int operator()(int i) const { return perm_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& perm() const { return perm_; }

  /// (this * other)(i) = this(other(i)).
  WeylElem operator*(const WeylElem& other) const;
  WeylElem inverse() const;

  /// One-line notation, 1-based: "213".  Ranks above 9 are comma separated.
  std::string one_line() const;

  friend auto operator<=>(const WeylElem&, const WeylElem&) = default;
  friend bool operator==(const WeylElem&, const WeylElem&) = default;

 private:
  std::vector<int> perm_;
};

/// (w . mu)_{w(i)} = mu_i.
Coweight weyl_apply(const WeylElem& w, const Coweight& mu);

}  // namespace fundom
