#ifndef OKA_POLYNOMIAL_HPP
#define OKA_POLYNOMIAL_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "oka/variables.hpp"

namespace oka {

/// Exact rational coefficients. mpq_class keeps itself canonical
/// (reduced, positive denominator).
using Rational = mpq_class;

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// A power product with non-negative exponents, stored sparsely as
/// (variable id, exponent) pairs sorted by id. No zero exponents are kept.
class Monomial {
 public:
  Monomial() = default;  // the unit monomial

  static Monomial one() { return Monomial(); }
  static Monomial of(Variable v, int exp = 1);

  int exponent(Variable v) const;
  int total_degree() const;
  bool is_one() const { return e_.empty(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Requires divides(o) in the caller's direction: *this / o.
  Monomial divided_by(const Monomial& o) const;

  const std::vector<std::pair<int, int>>& factors() const { return e_; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<std::pair<int, int>> e_;
};

/// Graded lexicographic comparison: total degree first, ties broken by the
/// registered variable order (a higher exponent on an earlier variable wins).
/// Returns <0, 0, >0.
int compare_graded_lex(const Monomial& a, const Monomial& b);

struct MonomialGradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_graded_lex(a, b) < 0;
  }
};

/// Exact multivariate polynomial over the rationals.
///
/// Terms are kept in canonical form: no zero coefficients, monomials sorted
/// in descending graded-lex order (leading term first). Equality is
/// structural, which coincides with mathematical equality.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;

    friend bool operator==(const Term& a, const Term& b) {
      return a.mono == b.mono && a.coeff == b.coeff;
    }
  };

  Polynomial() = default;  // zero
  Polynomial(const Rational& c);
  Polynomial(long c) : Polynomial(Rational(c)) {}
  Polynomial(int c) : Polynomial(Rational(c)) {}
  explicit Polynomial(Variable v);

  static Polynomial term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Requires is_constant().
  Rational constant_value() const;
  bool is_one() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  int total_degree() const;          // -1 for the zero polynomial
  int degree(Variable v) const;      // -1 for the zero polynomial
  /// Total degree over the given set of variables only.
  int degree_in(const std::vector<Variable>& vs) const;
  bool depends_on(Variable v) const;
  std::vector<Variable> variables() const;

  const Term& leading_term() const;  // w.r.t. graded-lex; requires nonzero

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator*(const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial pow(unsigned n) const;

  /// Exact formal partial derivative.
  Polynomial derivative(Variable v) const;

  /// Coefficient of v^k, a polynomial in the remaining variables.
  Polynomial coefficient_of(Variable v, int k) const;
  /// All coefficients [c_0, ..., c_deg] with respect to v.
  std::vector<Polynomial> coefficients_in(Variable v) const;

  /// Simultaneous polynomial substitution (variables not bound are kept).
  Polynomial substitute(const std::map<Variable, Polynomial>& bindings) const;

  /// Floating evaluation by a Horner scheme, one variable at a time.
  std::complex<double> evaluate(
      const std::map<Variable, std::complex<double>>& point) const;

  /// Canonical text form, graded-lex sorted, e.g. "-2*x^3 - t*x + 1/2*y^2".
  std::string to_string() const;

 private:
  // Invariant: sorted descending graded-lex, no zero coefficients.
  std::vector<Term> terms_;

  friend Polynomial
  from_term_map(std::map<Monomial, Rational, MonomialGradedLexLess>&& m);
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Primitive positive gcd (integer coefficients, content 1, positive leading
/// coefficient), computed by content/primitive-part recursion along the
/// variable order. gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Exact division; returns std::nullopt when b does not divide a.
std::optional<Polynomial> exact_divide(const Polynomial& a,
                                       const Polynomial& b);

/// a = q*b + r with deg_v(r) < deg_v(b), computed over the field of
/// fractions in the other variables;
/// the boolean is false when q or r fails to be polynomial.
struct PolyDivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Scales a polynomial with rational coefficients to integer coefficients
/// with content 1; the returned rational c satisfies p = c * primitive(p).
/// Sign convention: the primitive part has positive leading coefficient.
Rational rational_content(const Polynomial& p);
Polynomial primitive_scaled(const Polynomial& p);

}  // namespace oka

#endif
