#include "fundom/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fundom {

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(int exponent, Coeff coeff) {
  IntPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

IntPolynomial IntPolynomial::geometric(int lo, int hi) {
  IntPolynomial p;
  for (int e = lo; e <= hi; ++e) p.add_term(e, 1);
  return p;
}

IntPolynomial::Coeff IntPolynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void IntPolynomial::add_term(int exponent, Coeff coeff) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (coeff == 0) return;
  if (exponent > degree()) c_.resize(static_cast<std::size_t>(exponent) + 1, 0);
  c_[static_cast<std::size_t>(exponent)] += coeff;
  trim();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(Coeff k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPolynomial::Coeff> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<Coeff> r(static_cast<std::size_t>(k), 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(r));
}

IntPolynomial::Coeff IntPolynomial::evaluate_at_one() const {
  Coeff s = 0;
  for (Coeff c : c_) s += c;
  return s;
}

IntPolynomial::Coeff IntPolynomial::evaluate(Coeff x) const {
  Coeff acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::substitute_square() const {
  if (is_zero()) return {};
  std::vector<Coeff> r(2 * c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::halve_exponents() const {
  if (!only_even_powers()) throw std::invalid_argument("polynomial has odd powers");
  std::vector<Coeff> r;
  for (std::size_t i = 0; i < c_.size(); i += 2) r.push_back(c_[i]);
  return IntPolynomial(std::move(r));
}

bool IntPolynomial::only_even_powers() const {
  for (std::size_t i = 1; i < c_.size(); i += 2) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool IntPolynomial::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](Coeff c) { return c >= 0; });
}

std::string IntPolynomial::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Coeff c = c_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Coeff mag = c < 0 ? -c : c;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace fundom
