#pragma once

// Truncated bivariate power series in T1, T2 with coefficients in Z[t], and
// sums of fractions whose denominators are products of (1 - t^e T1^a T2^b).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fundom/polynomial.hpp"

namespace fundom {

/// Coefficients c[a][b] for a + b <= order; everything else is zero.
class BiSeries {
 public:
  explicit BiSeries(int order);

  int order() const { return order_; }
  bool in_range(int a, int b) const { return a >= 0 && b >= 0 && a + b <= order_; }
  /// Zero outside the truncation.
  const IntPolynomial& at(int a, int b) const;
  IntPolynomial& at_mut(int a, int b);
  void set(int a, int b, IntPolynomial p);

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator*=(IntPolynomial::Coeff k);
  /// c[a][b] -> c[b][a].
  BiSeries transposed() const;

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::size_t index(int a, int b) const;
  int order_;
  std::vector<IntPolynomial> c_;
};

/// coeff * t^t_exp * T1^a * T2^b
struct SeriesMonomial {
  std::int64_t coeff;
  int t_exp;
  int a;
  int b;
};

/// 1 - t^t_exp * T1^a * T2^b
struct DenominatorFactor {
  int t_exp;
  int a;
  int b;
};

struct RationalTerm {
  int sign = 1;
  std::vector<SeriesMonomial> numerator;
  std::vector<DenominatorFactor> denominator;
};

struct RationalFn {
  std::vector<RationalTerm> terms;
  std::string str() const;
};

/// Throws std::invalid_argument for a factor with a + b == 0 or negative
/// exponents.
BiSeries expand_term(const RationalTerm& term, int order);
BiSeries expand_rational(const RationalFn& f, int order);

/// The seven-fraction generating function for GL_3.
RationalFn corollary_expression();

/// c[n1][n2] = closed_form(n1, n2) for n1, n2 >= 1. Requires order >= 2.
BiSeries direct_series(int order);

/// c[n1][n2] = (2 - [n1 == n2]) closed_form(n1, n2) for n1 <= n2, zero for n1 > n2.
BiSeries folded_direct_series(int order);

/// (s + s.transposed()) / 2; throws InvariantViolation on an odd coefficient.
BiSeries symmetrize(const BiSeries& s);

struct SeriesComparison {
  bool equal = true;
  int n1 = 0;  // first differing index, lexicographic
  int n2 = 0;
  IntPolynomial left;
  IntPolynomial right;
  int mismatches = 0;
};
/// Coefficient-wise comparison; requires equal orders.
SeriesComparison series_equal(const BiSeries& a, const BiSeries& b);

}  // namespace fundom
