#ifndef OKA_RATIONAL_FUNCTION_HPP
#define OKA_RATIONAL_FUNCTION_HPP

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "oka/polynomial.hpp"

namespace oka {

/// Substitution would collapse a denominator to the zero polynomial.
struct pole_collapse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Floating evaluation hit a (near-)vanishing denominator.
struct evaluation_at_pole_error : std::runtime_error {
  evaluation_at_pole_error(const std::string& msg,
                           std::complex<double> den_value)
      : std::runtime_error(msg), denominator_value(den_value) {}
  std::complex<double> denominator_value;
};

/// Exact rational function numerator/denominator in canonical form:
///  - the denominator is nonzero,
///  - gcd(numerator, denominator) = 1,
///  - the denominator has integer coefficients with content 1 and positive
///    leading coefficient (graded-lex),
///  - zero is 0/1.
/// With this normalization structural equality is mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
  RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}
  RationalFunction(int c) : num_(Rational(c)), den_(Rational(1)) {}
  explicit RationalFunction(Variable v) : num_(Polynomial(v)),
                                          den_(Rational(1)) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant_value() const;

  bool depends_on(Variable v) const {
    return num_.depends_on(v) || den_.depends_on(v);
  }
  /// Total degree in the given variables, max over numerator/denominator.
  int degree_in(const std::vector<Variable>& vs) const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  RationalFunction pow(int n) const;  // negative exponents allowed

  friend bool operator==(const RationalFunction& a,
                         const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a,
                         const RationalFunction& b) {
    return !(a == b);
  }

  /// Exact formal partial derivative (quotient rule, reduced).
  RationalFunction derivative(Variable v) const;

  /// Exact simultaneous substitution; unbound variables stay themselves.
  /// Throws pole_collapse_error when the substituted denominator vanishes
  /// identically.
  RationalFunction substitute(
      const std::map<Variable, RationalFunction>& bindings) const;

  std::complex<double> evaluate(
      const std::map<Variable, std::complex<double>>& point,
      double singular_floor = 1e-120) const;

  /// Canonical text form: "num" when the denominator is 1, otherwise
  /// "(num)/(den)".
  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;

  void normalize();
};

/// The sole notion of symbolic identity used by the verification suites:
/// a - b reduces to zero. With canonical forms this coincides with
/// structural equality.
bool equals(const RationalFunction& a, const RationalFunction& b);

}  // namespace oka

#endif
