#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fundom {

/// Univariate polynomial with exact integer coefficients. The variable is
/// whatever the caller says it is; Poincare polynomials are held in q = t^2
/// and rendered in t on demand.
class IntPolynomial {
 public:
  using Coeff = std::int64_t;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> coeffs);
  IntPolynomial(std::initializer_list<Coeff> coeffs) : IntPolynomial(std::vector<Coeff>(coeffs)) {}

  static IntPolynomial monomial(int exponent, Coeff coeff = 1);
  /// x^lo + x^{lo+1} + ... + x^hi; zero when hi < lo.
  static IntPolynomial geometric(int lo, int hi);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Coeff operator[](int i) const;
  const std::vector<Coeff>& coeffs() const { return c_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(Coeff k);
  void add_term(int exponent, Coeff coeff);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, Coeff k) { return a *= k; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Multiply by x^k, k >= 0.
  IntPolynomial shifted(int k) const;
  Coeff evaluate_at_one() const;
  Coeff evaluate(Coeff x) const;
  /// p(x) -> p(x^2): the q = t^2 substitution.
  IntPolynomial substitute_square() const;
  /// Inverse of substitute_square; throws if an odd power is present.
  IntPolynomial halve_exponents() const;
  bool only_even_powers() const;
  bool nonnegative() const;

  /// "1 + t^2 + 4*t^4", "0" for zero. Ascending powers.
  std::string str(std::string_view var) const;

 private:
  void trim();
  std::vector<Coeff> c_;
};

}  // namespace fundom
