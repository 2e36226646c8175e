#include "oka/invariants.hpp"

#include <map>

#include "oka/linsolve.hpp"
#include "oka/parser.hpp"

namespace oka {
namespace invariants {

Polynomial particular_E() {
  return parse_polynomial("z*(xi^3*z - 2*t*xi^2 - 8)");
}

Polynomial particular_Delta() {
  return parse_polynomial("xi^3*z - t*xi^2 - 4");
}

RationalFunction apply_tau(const RationalFunction& f) {
  static const RationalFunction tau_z = parse("8/xi^3 + 2*t/xi - z");
  return f.substitute({{vars::z(), tau_z}});
}

RationalFunction apply_sigma_zw(const RationalFunction& f) {
  return sigma(ChartId::ZW).pull_back(f);
}

EvenOddSplit even_odd_split(const Polynomial& K) {
  Polynomial K_raw = K.substitute({{vars::w(), -Polynomial(vars::w())}});
  Rational half(1, 2);
  return EvenOddSplit{(K + K_raw) * half, (K - K_raw) * half};
}

namespace {

// Re-expresses even powers of w as xi; shift = 1 peels one w first
// (for odd parts K^- = w G(z, w^2)).
Polynomial w_squared_to_xi(const Polynomial& p, int shift) {
  Polynomial out;
  for (const auto& term : p.terms()) {
    int e = term.mono.exponent(vars::w());
    if ((e - shift) % 2 != 0 || e < shift)
      throw std::logic_error("unexpected w-parity in even/odd part");
    Monomial m = term.mono.divided_by(Monomial::of(vars::w(), e)) *
                 Monomial::of(vars::xi(), (e - shift) / 2);
    out += Polynomial::term(term.coeff, m);
  }
  return out;
}

}  // namespace

Polynomial even_part_to_F(const Polynomial& Kplus) {
  return w_squared_to_xi(Kplus, 0);
}

Polynomial odd_part_to_G(const Polynomial& Kminus) {
  return w_squared_to_xi(Kminus, 1);
}

std::vector<Polynomial> decompose_even(const Polynomial& F) {
  RationalFunction defect = apply_tau(F) - RationalFunction(F);
  if (!defect.is_zero())
    throw invariance_error("input is not tau-invariant", defect);

  static const Polynomial divisor =
      parse_polynomial("xi^3*z - 2*t*xi^2 - 8");
  std::vector<Polynomial> fs;
  Polynomial rest = F;
  while (!rest.is_zero()) {
    Polynomial f0 = rest.substitute({{vars::z(), Polynomial()}});
    fs.push_back(f0);
    Polynomial next = rest - f0;
    if (next.is_zero()) break;
    auto by_z = exact_divide(next, Polynomial(vars::z()));
    if (!by_z)
      throw std::logic_error("decompose_even: remainder not divisible by z");
    auto by_factor = exact_divide(*by_z, divisor);
    if (!by_factor)
      throw std::logic_error(
          "decompose_even: quotient not divisible by the E-factor");
    rest = *by_factor;
  }
  if (fs.empty()) return fs;  // trivial input: M = -1
  while (!fs.empty() && fs.back().is_zero()) fs.pop_back();

  // Contract: the output reassembles the input exactly.
  Polynomial reassembled;
  Polynomial e_pow(Rational(1));
  const Polynomial E = particular_E();
  for (const auto& f : fs) {
    reassembled += f * e_pow;
    e_pow *= E;
  }
  if (reassembled != F)
    throw std::logic_error("decompose_even: reassembly mismatch");
  return fs;
}

std::vector<Polynomial> decompose_odd(const Polynomial& G) {
  RationalFunction defect = apply_tau(G) + RationalFunction(G);
  if (!defect.is_zero())
    throw invariance_error("input is not skew tau-invariant", defect);
  if (G.is_zero()) return {};
  auto by_delta = exact_divide(G, particular_Delta());
  if (!by_delta)
    throw std::logic_error("decompose_odd: input not divisible by Delta");
  return decompose_even(*by_delta);
}

VerificationReport verify_ED_identities() {
  VerificationReport rep;
  const Variable z = vars::z(), w = vars::w(), x = vars::x();

  // The pole uniformization inverse: z in terms of (y, w).
  const RationalFunction z_of_yw = transition(ChartId::XY, ChartId::ZW)
                                       .components[0];
  const std::map<Variable, RationalFunction> rewrite = {{z, z_of_yw}};
  const RationalFunction winv2 = parse("1/w^2");  // x on the overlap

  const Polynomial E = particular_E();
  const Polynomial D = particular_Delta();
  const std::map<Variable, RationalFunction> xi_to_w2 = {
      {vars::xi(), parse("w^2")}};

  RationalFunction E_zw = RationalFunction(E).substitute(xi_to_w2);
  RationalFunction wD_zw =
      RationalFunction(Polynomial(w)) * RationalFunction(D).substitute(xi_to_w2);

  {
    // w Delta(z, w^2) = 2 x^-2 y + x^-3 under the pole uniformization.
    RationalFunction lhs = wD_zw.substitute(rewrite);
    RationalFunction rhs =
        parse("2*y/x^2 + 1/x^3").substitute({{x, winv2}});
    RationalFunction d = lhs - rhs;
    rep.add("ED.w_Delta_equals_2x2y_plus_x3", d.is_zero(), d.to_string());
  }
  {
    // E(z, w^2) = 4y^2 + 4 x^-1 y + x^-2 - x^-1 (4x^2+t)^2.
    RationalFunction lhs = E_zw.substitute(rewrite);
    RationalFunction rhs =
        parse("4*y^2 + 4*y/x + 1/x^2 - (4*x^2+t)^2/x")
            .substitute({{x, winv2}});
    RationalFunction d = lhs - rhs;
    rep.add("ED.E_equals_quartic_expression", d.is_zero(), d.to_string());
  }
  {
    // Auxiliary relation E(z,w^2) = w^-8 (w Delta)^2 - w^2 (t + 4 w^-4)^2,
    // an identity already in the (z,w) variables.
    RationalFunction rhs = wD_zw * wD_zw * parse("1/w^8") -
                           parse("w^2*(t + 4/w^4)^2");
    RationalFunction d = E_zw - rhs;
    rep.add("ED.auxiliary_E_Delta_relation", d.is_zero(), d.to_string());
  }
  return rep;
}

RationalFunction push_to_xy(const InvariantDecomposition& decomp) {
  // The images of E and w*Delta in the original chart.
  static const RationalFunction E_img =
      parse("4*y^2 + 4*y/x + 1/x^2 - (4*x^2+t)^2/x");
  static const RationalFunction wD_img = parse("2*y/x^2 + 1/x^3");
  const std::map<Variable, RationalFunction> xi_inv = {
      {vars::xi(), parse("1/x")}};

  RationalFunction H;
  RationalFunction e_pow(Rational(1));
  for (const auto& f : decomp.even_coeffs) {
    H += RationalFunction(f).substitute(xi_inv) * e_pow;
    e_pow *= E_img;
  }
  RationalFunction odd;
  e_pow = RationalFunction(Rational(1));
  for (const auto& g : decomp.odd_coeffs) {
    odd += RationalFunction(g).substitute(xi_inv) * e_pow;
    e_pow *= E_img;
  }
  return H + wD_img * odd;
}

LaurentSplitX split_laurent_in_x(const RationalFunction& f) {
  const Variable x = vars::x();
  const Polynomial& den = f.denominator();
  int k = den.degree(x);
  // Contract: the denominator is c * x^k.
  Polynomial check = Polynomial::term(den.leading_term().coeff,
                                      Monomial::of(x, k));
  if (den != check)
    throw std::logic_error("split_laurent_in_x: denominator is not a power of x");
  LaurentSplitX out;
  Polynomial poly_num, principal_num;
  for (const auto& term : f.numerator().terms()) {
    if (term.mono.exponent(x) >= k)
      poly_num += Polynomial::term(term.coeff, term.mono);
    else
      principal_num += Polynomial::term(term.coeff, term.mono);
  }
  out.polynomial_part = RationalFunction(poly_num, den);
  out.principal_part = RationalFunction(principal_num, den);
  return out;
}

ConstancyVerdict constancy_certificate(const Polynomial& K) {
  RationalFunction defect = apply_sigma_zw(K) - RationalFunction(K);
  if (!defect.is_zero())
    return {ConstancyKind::NotSigmaInvariant, defect};

  EvenOddSplit split = even_odd_split(K);
  InvariantDecomposition decomp;
  decomp.even_coeffs = decompose_even(even_part_to_F(split.plus));
  decomp.odd_coeffs = decompose_odd(odd_part_to_G(split.minus));
  RationalFunction H = push_to_xy(decomp);
  LaurentSplitX laurent = split_laurent_in_x(H);
  if (!laurent.principal_part.is_zero())
    return {ConstancyKind::HasPolesInX, laurent.principal_part};

  // No poles along x = 0: the leading-term argument forces constancy in
  // the phase variables; checked as an internal contract.
  if (K.degree_in({vars::z(), vars::w()}) > 0)
    throw std::logic_error(
        "constancy_certificate: pole-free push of a non-constant input");
  return {ConstancyKind::Constant, RationalFunction()};
}

// ---------------------------------------------------------------------------
// Bounded-degree ansatz scans

namespace {

struct AnsatzBasis {
  std::vector<Monomial> monos;  // z^i w^j t^k within the bounds
};

AnsatzBasis make_basis(int deg_z, int deg_w, int deg_t) {
  AnsatzBasis basis;
  for (int i = 0; i <= deg_z; ++i)
    for (int j = 0; j <= deg_w; ++j)
      for (int k = 0; k <= deg_t; ++k)
        basis.monos.push_back(Monomial::of(vars::z(), i) *
                              Monomial::of(vars::w(), j) *
                              Monomial::of(vars::t(), k));
  return basis;
}

// Dense row assembly: maps each monomial of a cleared polynomial identity
// to a row index.
struct RowIndex {
  std::map<Monomial, int, MonomialGradedLexLess> index;
  int of(const Monomial& m) {
    auto [it, inserted] = index.emplace(m, static_cast<int>(index.size()));
    return it->second;
  }
};

UniquenessScan run_scan(int deg_z, int deg_w, int deg_t, bool shifted_rhs,
                        bool include_entirety) {
  if (deg_z < 0 || deg_w < 0 || deg_t < 0)
    throw std::invalid_argument("degree bounds must be non-negative");
  const Variable z = vars::z(), w = vars::w();
  AnsatzBasis basis = make_basis(deg_z, deg_w, deg_t);
  const int n = static_cast<int>(basis.monos.size());

  RowIndex rows;
  std::vector<std::map<int, Rational>> cols(n);  // row -> coefficient
  std::map<int, Rational> rhs_entries;

  // Constraint (i): K∘sigma - K = 2/w (or = 0 for the invariant problem),
  // cleared by the common denominator w^(6 deg_z).
  {
    const int DA = 6 * deg_z + 1;
    const Polynomial wDA = Polynomial::term(Rational(1), Monomial::of(w, DA));
    for (int c = 0; c < n; ++c) {
      RationalFunction m{Polynomial::term(Rational(1), basis.monos[c])};
      RationalFunction img = (apply_sigma_zw(m) - m) * RationalFunction(wDA);
      if (!img.is_polynomial())
        throw std::logic_error("scan: sigma image fails to clear");
      for (const auto& term : img.numerator().terms())
        cols[c][rows.of(term.mono)] += term.coeff;
    }
    if (shifted_rhs) {
      // RHS 2/w cleared: 2 w^(DA-1).
      rhs_entries[rows.of(Monomial::of(w, DA - 1))] += Rational(2);
    }
  }

  // Constraint (ii): H = K + 1/w rewritten through the pole uniformization
  // must be free of negative powers of x. In (y,w)-space with x = w^-2 this
  // says: only even, non-positive true w-exponents survive. Cleared by
  // w^(6 deg_z + 1); a monomial with cleared exponent b is "bad" when
  // b - shift is odd or positive.
  if (include_entirety) {
    const int shift = 6 * deg_z + 1;
    const Polynomial wS = Polynomial::term(Rational(1), Monomial::of(w, shift));
    const RationalFunction z_of_yw =
        transition(ChartId::XY, ChartId::ZW).components[0];
    auto bad = [shift](const Monomial& m) {
      int b = m.exponent(vars::w()) - shift;
      return b > 0 || ((b % 2) != 0);
    };
    for (int c = 0; c < n; ++c) {
      RationalFunction m{Polynomial::term(Rational(1), basis.monos[c])};
      RationalFunction img =
          m.substitute({{z, z_of_yw}}) * RationalFunction(wS);
      if (!img.is_polynomial())
        throw std::logic_error("scan: uniformized image fails to clear");
      for (const auto& term : img.numerator().terms()) {
        if (bad(term.mono)) cols[c][rows.of(term.mono)] += term.coeff;
      }
    }
    // The 1/w part of H contributes w^(shift-1), a bad monomial; move it to
    // the right-hand side.
    Monomial one_over_w = Monomial::of(w, shift - 1);
    if (bad(one_over_w)) rhs_entries[rows.of(one_over_w)] += Rational(-1);
  }

  const int n_rows = static_cast<int>(rows.index.size());
  std::vector<std::vector<Rational>> a(
      n_rows, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> rhs(n_rows, Rational(0));
  for (int c = 0; c < n; ++c)
    for (const auto& [r, q] : cols[c]) a[r][c] = q;
  for (const auto& [r, q] : rhs_entries) rhs[r] = q;

  LinearSolution lin = solve_exact(std::move(a), std::move(rhs));

  UniquenessScan scan;
  scan.feasible = lin.feasible;
  scan.rank = lin.rank;
  scan.unknowns = n;
  if (!lin.feasible) return scan;

  auto assemble = [&basis, n](const std::vector<Rational>& coeffs) {
    Polynomial p;
    for (int c = 0; c < n; ++c)
      if (coeffs[c] != 0)
        p += Polynomial::term(coeffs[c], basis.monos[c]);
    return p;
  };
  scan.particular = assemble(lin.particular);
  for (const auto& basis_vec : lin.nullspace)
    scan.homogeneous_basis.push_back(assemble(basis_vec));
  return scan;
}

}  // namespace

int UniquenessScan::phase_relevant_dimension() const {
  int d = 0;
  for (const auto& h : homogeneous_basis)
    if (h.degree_in({vars::z(), vars::w()}) > 0) ++d;
  return d;
}

UniquenessScan uniqueness_scan(int deg_z, int deg_w, int deg_t) {
  return run_scan(deg_z, deg_w, deg_t, true, true);
}

UniquenessScan invariant_scan(int deg_z, int deg_w, int deg_t) {
  return run_scan(deg_z, deg_w, deg_t, false, false);
}

}  // namespace invariants
}  // namespace oka
