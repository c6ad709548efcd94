#include "fundom/series.hpp"

#include <sstream>
#include <stdexcept>

#include "fundom/gl3_paving.hpp"
#include "fundom/weyl_lattice.hpp"

namespace fundom {

namespace {

const IntPolynomial kZero;

std::string monomial_str(int t_exp, int a, int b) {
  std::ostringstream os;
  bool any = false;
  auto put = [&](const char* var, int e) {
    if (e == 0) return;
    os << (any ? "*" : "") << var;
    if (e > 1) os << '^' << e;
    any = true;
  };
  put("t", t_exp);
  put("T1", a);
  put("T2", b);
  if (!any) os << '1';
  return os.str();
}

}  // namespace

BiSeries::BiSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  c_.resize(static_cast<std::size_t>((order + 1) * (order + 2) / 2));
}

std::size_t BiSeries::index(int a, int b) const {
  // Row a holds b = 0 .. order - a.
  const int before = a * (order_ + 1) - a * (a - 1) / 2;
  return static_cast<std::size_t>(before + b);
}

const IntPolynomial& BiSeries::at(int a, int b) const {
  if (!in_range(a, b)) return kZero;
  return c_[index(a, b)];
}

IntPolynomial& BiSeries::at_mut(int a, int b) {
  if (!in_range(a, b)) throw std::out_of_range("index outside truncation");
  return c_[index(a, b)];
}

void BiSeries::set(int a, int b, IntPolynomial p) { at_mut(a, b) = std::move(p); }

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("truncation orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

BiSeries& BiSeries::operator*=(IntPolynomial::Coeff k) {
  for (auto& p : c_) p *= k;
  return *this;
}

BiSeries BiSeries::transposed() const {
  BiSeries r(order_);
  for (int a = 0; a <= order_; ++a) {
    for (int b = 0; a + b <= order_; ++b) r.set(b, a, at(a, b));
  }
  return r;
}

std::string RationalFn::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms) {
    os << (term.sign < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    os << '(';
    for (std::size_t i = 0; i < term.numerator.size(); ++i) {
      const auto& m = term.numerator[i];
      if (i > 0) os << (m.coeff < 0 ? " - " : " + ");
      else if (m.coeff < 0) os << '-';
      const std::int64_t mag = m.coeff < 0 ? -m.coeff : m.coeff;
      const std::string mono = monomial_str(m.t_exp, m.a, m.b);
      if (mag != 1) os << mag << (mono == "1" ? "" : "*" + mono);
      else os << mono;
    }
    os << ")/(";
    for (std::size_t i = 0; i < term.denominator.size(); ++i) {
      const auto& d = term.denominator[i];
      os << (i ? "*" : "") << "(1 - " << monomial_str(d.t_exp, d.a, d.b) << ')';
    }
    os << ')';
  }
  return os.str();
}

BiSeries expand_term(const RationalTerm& term, int order) {
  BiSeries s(order);
  for (const auto& m : term.numerator) {
    if (m.t_exp < 0 || m.a < 0 || m.b < 0) throw std::invalid_argument("negative exponent in numerator");
    if (s.in_range(m.a, m.b)) s.at_mut(m.a, m.b).add_term(m.t_exp, m.coeff * term.sign);
  }
  for (const auto& d : term.denominator) {
    if (d.t_exp < 0 || d.a < 0 || d.b < 0) throw std::invalid_argument("negative exponent in denominator");
    if (d.a + d.b == 0) throw std::invalid_argument("denominator factor has no T-degree");
    // Dividing by (1 - x): s'[i] = s[i] + x s'[i - shift], in lexicographic order.
    for (int a = d.a; a <= order; ++a) {
      for (int b = d.b; a + b <= order; ++b) {
        const IntPolynomial& prev = s.at(a - d.a, b - d.b);
        if (!prev.is_zero()) s.at_mut(a, b) += prev.shifted(d.t_exp);
      }
    }
  }
  return s;
}

BiSeries expand_rational(const RationalFn& f, int order) {
  BiSeries s(order);
  for (const auto& term : f.terms) s += expand_term(term, order);
  return s;
}

RationalFn corollary_expression() {
  const DenominatorFactor t2{0, 0, 1};         // 1 - T2
  const DenominatorFactor tt2{2, 0, 1};        // 1 - t^2 T2
  const DenominatorFactor p0{0, 1, 1};         // 1 - T1 T2
  const DenominatorFactor p4{4, 1, 1};         // 1 - t^4 T1 T2
  const DenominatorFactor p6{6, 1, 1};         // 1 - t^6 T1 T2
  RationalFn f;
  f.terms = {
      {1, {{2, 2, 1, 1}, {2, 0, 1, 1}}, {t2, p0, p4, p4}},
      {1, {{6, 4, 1, 2}, {-2, 8, 2, 3}}, {t2, tt2, p4, p4}},
      {1, {{8, 4, 1, 1}}, {tt2, p4, p4, p6}},
      {1, {{2, 6, 1, 1}}, {tt2, p6}},
      {-1, {{1, 2, 1, 1}, {1, 0, 1, 1}}, {p0, p4, p4}},
      {-1, {{4, 4, 1, 1}}, {p4, p4, p6}},
      {-1, {{1, 6, 1, 1}}, {p6}},
  };
  return f;
}

BiSeries direct_series(int order) {
  if (order < 2) throw std::invalid_argument("direct_series needs order >= 2");
  BiSeries s(order);
  for (int a = 1; a <= order; ++a) {
    for (int b = 1; a + b <= order; ++b) s.set(a, b, closed_form(a, b));
  }
  return s;
}

BiSeries folded_direct_series(int order) {
  if (order < 2) throw std::invalid_argument("folded_direct_series needs order >= 2");
  BiSeries s(order);
  for (int a = 1; a <= order; ++a) {
    for (int b = a; a + b <= order; ++b) s.set(a, b, closed_form(a, b) * (a == b ? 1 : 2));
  }
  return s;
}

BiSeries symmetrize(const BiSeries& s) {
  BiSeries sum = s;
  sum += s.transposed();
  BiSeries out(s.order());
  for (int a = 0; a <= s.order(); ++a) {
    for (int b = 0; a + b <= s.order(); ++b) {
      std::vector<IntPolynomial::Coeff> c = sum.at(a, b).coeffs();
      for (auto& x : c) {
        if (x % 2 != 0) throw InvariantViolation("odd coefficient while symmetrising");
        x /= 2;
      }
      out.set(a, b, IntPolynomial(std::move(c)));
    }
  }
  return out;
}

SeriesComparison series_equal(const BiSeries& a, const BiSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("truncation orders differ");
  SeriesComparison r;
  for (int i = 0; i <= a.order(); ++i) {
    for (int j = 0; i + j <= a.order(); ++j) {
      if (a.at(i, j) == b.at(i, j)) continue;
      if (r.equal) {
        r.equal = false;
        r.n1 = i;
        r.n2 = j;
        r.left = a.at(i, j);
        r.right = b.at(i, j);
      }
      ++r.mismatches;
    }
  }
  return r;
}

}  // namespace fundom
