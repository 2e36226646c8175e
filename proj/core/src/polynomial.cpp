#include "oka/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oka {

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Variable v, int exp) {
  if (exp < 0) throw std::invalid_argument("monomial exponent must be >= 0");
  Monomial m;
  if (exp > 0) m.e_.emplace_back(v.id(), exp);
  return m;
}

int Monomial::exponent(Variable v) const {
  for (const auto& [id, e] : e_)
    if (id == v.id()) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [id, e] : e_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  auto i = e_.begin();
  auto j = o.e_.begin();
  while (i != e_.end() || j != o.e_.end()) {
    if (j == o.e_.end() || (i != e_.end() && i->first < j->first)) {
      r.e_.push_back(*i++);
    } else if (i == e_.end() || j->first < i->first) {
      r.e_.push_back(*j++);
    } else {
      r.e_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  // *this | o
  auto j = o.e_.begin();
  for (const auto& [id, e] : e_) {
    while (j != o.e_.end() && j->first < id) ++j;
    if (j == o.e_.end() || j->first != id || j->second < e) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  auto j = o.e_.begin();
  for (const auto& [id, e] : e_) {
    int sub = 0;
    while (j != o.e_.end() && j->first < id) ++j;
    if (j != o.e_.end() && j->first == id) sub = j->second;
    int d = e - sub;
    if (d < 0) throw std::invalid_argument("monomial division underflow");
    if (d > 0) r.e_.emplace_back(id, d);
  }
  return r;
}

int compare_graded_lex(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() || j != b.factors().end()) {
    int ida = i != a.factors().end() ? i->first : INT32_MAX;
    int idb = j != b.factors().end() ? j->first : INT32_MAX;
    if (ida < idb) return 1;   // a has exponent on an earlier variable
    if (idb < ida) return -1;
    if (i->second != j->second) return i->second < j->second ? -1 : 1;
    ++i;
    ++j;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial from_term_map(
    std::map<Monomial, Rational, MonomialGradedLexLess>&& m) {
  Polynomial p;
  p.terms_.reserve(m.size());
  // The map is ascending; canonical storage is descending (leading first).
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (it->second != 0) p.terms_.push_back({it->first, it->second});
  }
  return p;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial::one(), c});
}

Polynomial::Polynomial(Variable v) {
  terms_.push_back({Monomial::of(v), Rational(1)});
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant())
    throw std::logic_error("constant_value() on a non-constant polynomial");
  return terms_[0].coeff;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() &&
         terms_[0].coeff == 1;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_[0].mono.total_degree();
}

int Polynomial::degree(Variable v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

int Polynomial::degree_in(const std::vector<Variable>& vs) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (Variable v : vs) s += t.mono.exponent(v);
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::depends_on(Variable v) const {
  for (const auto& t : terms_)
    if (t.mono.exponent(v) > 0) return true;
  return false;
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<int> seen(variable_count(), 0);
  for (const auto& t : terms_)
    for (const auto& [id, e] : t.mono.factors()) seen[id] = 1;
  std::vector<Variable> vs;
  for (int id = 0; id < variable_count(); ++id)
    if (seen[id]) vs.push_back(var_by_id(id));
  return vs;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term() of zero");
  return terms_[0];
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  // Merge two descending term lists.
  Polynomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    int cmp;
    if (i == terms_.end())
      cmp = -1;
    else if (j == o.terms_.end())
      cmp = 1;
    else
      cmp = compare_graded_lex(i->mono, j->mono);
    if (cmp > 0) {
      r.terms_.push_back(*i++);
    } else if (cmp < 0) {
      r.terms_.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) r.terms_.push_back({i->mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  // Single-term factors preserve the term order: scale and shift.
  if (terms_.empty() || o.terms_.empty()) return Polynomial();
  if (terms_.size() == 1 || o.terms_.size() == 1) {
    const Polynomial& single = terms_.size() == 1 ? *this : o;
    const Polynomial& other = terms_.size() == 1 ? o : *this;
    const Term& s = single.terms_[0];
    Polynomial r;
    r.terms_.reserve(other.terms_.size());
    for (const auto& term : other.terms_)
      r.terms_.push_back({term.mono * s.mono, term.coeff * s.coeff});
    return r;
  }
  std::map<Monomial, Rational, MonomialGradedLexLess> acc;
  for (const auto& ti : terms_) {
    for (const auto& tj : o.terms_) {
      Monomial m = ti.mono * tj.mono;
      auto [it, inserted] = acc.emplace(std::move(m), ti.coeff * tj.coeff);
      if (!inserted) it->second += ti.coeff * tj.coeff;
    }
  }
  return from_term_map(std::move(acc));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  *this = *this + o;
  return *this;
}
Polynomial& Polynomial::operator-=(const Polynomial& o) {
  *this = *this - o;
  return *this;
}
Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    base = (n >>= 1) ? base * base : Polynomial();
  }
  return result;
}

Polynomial Polynomial::derivative(Variable v) const {
  Polynomial r;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    if (e == 0) continue;
    Monomial m = t.mono.divided_by(Monomial::of(v));
    r += Polynomial::term(t.coeff * e, m);
  }
  return r;
}

Polynomial Polynomial::coefficient_of(Variable v, int k) const {
  Polynomial r;
  for (const auto& t : terms_) {
    if (t.mono.exponent(v) == k)
      r += Polynomial::term(t.coeff, t.mono.divided_by(Monomial::of(v, k)));
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(Variable v) const {
  int d = std::max(0, degree(v));
  std::vector<Polynomial> cs(d + 1);
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    cs[e] += Polynomial::term(t.coeff, t.mono.divided_by(Monomial::of(v, e)));
  }
  return cs;
}

Polynomial Polynomial::substitute(
    const std::map<Variable, Polynomial>& bindings) const {
  if (is_constant()) return *this;
  // Horner in the highest bound-or-present variable, recursing on
  // coefficients.
  std::vector<Variable> vs = variables();
  Variable v = vs.back();
  std::vector<Polynomial> cs = coefficients_in(v);
  Polynomial vv(v);
  auto it = bindings.find(v);
  if (it != bindings.end()) vv = it->second;
  Polynomial acc = cs.back().substitute(bindings);
  for (int k = static_cast<int>(cs.size()) - 2; k >= 0; --k) {
    acc = acc * vv + cs[k].substitute(bindings);
  }
  return acc;
}

std::complex<double> Polynomial::evaluate(
    const std::map<Variable, std::complex<double>>& point) const {
  if (is_zero()) return 0.0;
  if (is_constant()) return to_double(constant_value());
  std::vector<Variable> vs = variables();
  Variable v = vs.back();
  auto it = point.find(v);
  if (it == point.end())
    throw std::invalid_argument("evaluate: unbound variable " + v.name());
  std::vector<Polynomial> cs = coefficients_in(v);
  std::complex<double> acc = cs.back().evaluate(point);
  for (int k = static_cast<int>(cs.size()) - 2; k >= 0; --k) {
    acc = acc * it->second + cs[k].evaluate(point);
  }
  return acc;
}

namespace {

void print_monomial(std::ostringstream& os, const Monomial& m) {
  bool first = true;
  for (const auto& [id, e] : m.factors()) {
    if (!first) os << "*";
    first = false;
    os << var_by_id(id).name();
    if (e >= 2) os << "^" << e;
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (t.mono.is_one()) {
      os << oka::to_string(c);
    } else {
      if (c != 1) os << oka::to_string(c) << "*";
      print_monomial(os, t.mono);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Content, primitive parts, gcd

Rational rational_content(const Polynomial& p) {
  if (p.is_zero()) return Rational(1);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coeff.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (p.leading_term().coeff < 0) c = -c;
  return c;
}

Polynomial primitive_scaled(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational c = rational_content(p);
  return p * (Rational(1) / c);
}

namespace {

// Content of p viewed in R[v], R the ring in the remaining variables.
Polynomial content_in(const Polynomial& p, Variable v) {
  Polynomial c;
  for (const auto& coeff : p.coefficients_in(v)) {
    if (!coeff.is_zero()) c = poly_gcd(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

Polynomial primitive_part_in(const Polynomial& p, Variable v,
                             const Polynomial& content) {
  auto q = exact_divide(p, content);
  if (!q) throw std::logic_error("content does not divide its polynomial");
  return *q;
}

// Pseudo-remainder of f by g with respect to v (up to a power of lc(g)).
Polynomial pseudo_remainder(Polynomial f, const Polynomial& g, Variable v) {
  const int dg = g.degree(v);
  const Polynomial lcg = g.coefficient_of(v, dg);
  while (!f.is_zero() && f.degree(v) >= dg) {
    const int df = f.degree(v);
    const Polynomial lcf = f.coefficient_of(v, df);
    const Polynomial shift =
        Polynomial::term(Rational(1), Monomial::of(v, df - dg));
    f = lcg * f - lcf * shift * g;
  }
  return f;
}

}  // namespace

namespace {

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial g;
  for (const auto& [id, e] : a.factors()) {
    int eb = b.exponent(var_by_id(id));
    if (eb > 0) g = g * Monomial::of(var_by_id(id), std::min(e, eb));
  }
  return g;
}

// gcd of a single term against a polynomial: the common monomial factor.
Polynomial single_term_gcd(const Monomial& m, const Polynomial& p) {
  Monomial g = m;
  for (const auto& term : p.terms()) {
    g = monomial_gcd(g, term.mono);
    if (g.is_one()) break;
  }
  return Polynomial::term(Rational(1), g);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return primitive_scaled(b);
  if (b.is_zero()) return primitive_scaled(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
  // Monomial operands admit a direct answer; this is the dominant case
  // (denominators are powers of a single coordinate almost everywhere).
  if (a.term_count() == 1) return single_term_gcd(a.leading_term().mono, b);
  if (b.term_count() == 1) return single_term_gcd(b.leading_term().mono, a);

  // Recurse on the latest registered variable that occurs.
  const Variable v = std::max(a.variables().back(), b.variables().back(),
                              [](Variable l, Variable r) { return l < r; });
  if (!a.depends_on(v)) return poly_gcd(a, content_in(b, v));
  if (!b.depends_on(v)) return poly_gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  Polynomial f = primitive_part_in(a, v, ca);
  Polynomial g = primitive_part_in(b, v, cb);
  if (f.degree(v) < g.degree(v)) std::swap(f, g);
  while (!g.is_zero()) {
    Polynomial r = pseudo_remainder(f, g, v);
    f = std::move(g);
    if (!r.is_zero()) {
      r = primitive_part_in(r, v, content_in(r, v));
      r = primitive_scaled(r);
    }
    g = std::move(r);
  }
  return primitive_scaled(poly_gcd(ca, cb) * f);
}

std::optional<Polynomial> exact_divide(const Polynomial& a,
                                       const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  Polynomial r = a;
  Polynomial q;
  const auto& ltb = b.leading_term();
  while (!r.is_zero()) {
    const auto& ltr = r.leading_term();
    if (!ltb.mono.divides(ltr.mono)) return std::nullopt;
    Polynomial s =
        Polynomial::term(ltr.coeff / ltb.coeff, ltr.mono.divided_by(ltb.mono));
    q += s;
    r -= s * b;
  }
  return q;
}

}  // namespace oka
