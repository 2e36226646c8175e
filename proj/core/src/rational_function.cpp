#include "oka/rational_function.hpp"

#include <cmath>

namespace oka {

RationalFunction::RationalFunction(const Polynomial& num,
                                   const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero())
    throw std::invalid_argument("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_one()) {
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *exact_divide(num_, g);
      den_ = *exact_divide(den_, g);
    }
  }
  // Scale so the denominator is integer, content 1, positive leading
  // coefficient.
  Rational c = rational_content(den_);
  if (c != 1) {
    Rational inv = Rational(1) / c;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant())
    throw std::logic_error("constant_value() on non-constant");
  return num_.is_zero() ? Rational(0) : num_.constant_value();
}

int RationalFunction::degree_in(const std::vector<Variable>& vs) const {
  return std::max(num_.degree_in(vs), den_.degree_in(vs));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(
    const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(
    const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(
    const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(
    const RationalFunction& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  return *this = *this + o;
}
RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this = *this - o;
}
RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  return *this = *this * o;
}
RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this = *this / o;
}

RationalFunction RationalFunction::pow(int n) const {
  if (n == 0) return RationalFunction(Rational(1));
  if (n < 0) {
    if (is_zero()) throw std::invalid_argument("0 to a negative power");
    return RationalFunction(den_.pow(static_cast<unsigned>(-n)),
                            num_.pow(static_cast<unsigned>(-n)));
  }
  return RationalFunction(num_.pow(static_cast<unsigned>(n)),
                          den_.pow(static_cast<unsigned>(n)));
}

RationalFunction RationalFunction::derivative(Variable v) const {
  if (den_.is_one()) return RationalFunction(num_.derivative(v));
  return RationalFunction(
      num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

namespace {

RationalFunction substitute_poly(
    const Polynomial& p,
    const std::map<Variable, RationalFunction>& bindings) {
  if (p.is_constant())
    return RationalFunction(p);
  // Horner in the latest variable, recursing on coefficients; exactness is
  // preserved because every step is exact rational-function arithmetic.
  Variable v = p.variables().back();
  std::vector<Polynomial> cs = p.coefficients_in(v);
  RationalFunction vv{Polynomial(v)};
  auto it = bindings.find(v);
  if (it != bindings.end()) vv = it->second;
  RationalFunction acc = substitute_poly(cs.back(), bindings);
  for (int k = static_cast<int>(cs.size()) - 2; k >= 0; --k) {
    acc = acc * vv + substitute_poly(cs[k], bindings);
  }
  return acc;
}

}  // namespace

RationalFunction RationalFunction::substitute(
    const std::map<Variable, RationalFunction>& bindings) const {
  for (const auto& [v, rf] : bindings) {
    if (rf.denominator().is_zero())
      throw std::invalid_argument("binding with zero denominator");
  }
  RationalFunction n = substitute_poly(num_, bindings);
  RationalFunction d = substitute_poly(den_, bindings);
  if (d.is_zero())
    throw pole_collapse_error(
        "substitution collapses the denominator to zero");
  return n / d;
}

std::complex<double> RationalFunction::evaluate(
    const std::map<Variable, std::complex<double>>& point,
    double singular_floor) const {
  std::complex<double> d = den_.evaluate(point);
  if (std::abs(d) < singular_floor) {
    throw evaluation_at_pole_error("evaluation at a pole of the denominator",
                                   d);
  }
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool equals(const RationalFunction& a, const RationalFunction& b) {
  return (a - b).is_zero();
}

}  // namespace oka
