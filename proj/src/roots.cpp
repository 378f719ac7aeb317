#include "cycov/roots.hpp"

#include <algorithm>

namespace cycov {

namespace {

void require_positive_n(const Int& n) {
  if (n < 1) fail("BadN", "root degree must be >= 1, got " + n.get_str());
}

Int content_of(const CharVec& v) {
  Int c = 0;
  for (const Int& e : v) c = gcd(c, e);
  return c;
}

}  // namespace

std::pair<Int, Int> char_root_order(int m_rank, const CharVec& v,
                                    const Int& n) {
  require_positive_n(n);
  if (v.size() != static_cast<size_t>(m_rank))
    fail("DimensionMismatch", "character length does not match rank");
  // i*v/n in M  <=>  gcd(n, content(v)) | i
  Int d = gcd(n, content_of(v));
  return {n / d, d};
}

IntMat root_sublattice(const FanPtr& f, const CharVec& v, const Int& n) {
  check(f != nullptr, "validated fan present");
  require_positive_n(n);
  const int r = f->rank;
  if (v.size() != static_cast<size_t>(r))
    fail("DimensionMismatch", "character length does not match fan rank");
  // N' = {e : <v,e> = n*t for some t}; project the kernel of [v | -n].
  IntMat eq(1, r + 1);
  for (int j = 0; j < r; ++j) eq.at(0, j) = v[j];
  eq.at(0, r) = -n;
  IntMat kern = integer_kernel(eq);
  check(kern.rows() == r, "congruence kernel has full projected rank");
  IntMat gens(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gens.at(i, j) = kern.at(i, j);
  IntMat basis = hermite_normal_form(gens).h;
  auto index = sublattice_index(basis);
  check(index.has_value(), "root sublattice has finite index");
  check(*index == char_root_order(r, v, n).first,
        "sublattice index equals n'");
  return basis;
}

Int ramification_index(const Int& ord, const Int& n) {
  require_positive_n(n);
  return n / gcd(n, ord);
}

namespace {

// Coordinates of x in the row basis b (which is square, full rank). Fails
// loudly if x is not in the lattice spanned by b.
IntVec lattice_coordinates(const IntMat& b, const IntVec& x) {
  auto y = solve_integer(b.transpose(), x);
  check(y.has_value(), "point lies in the sublattice");
  return *y;
}

struct SublatticeData {
  IntMat basis;       // rows: basis of N'
  FanPtr component_fan;
  std::vector<Int> ramification;  // per base ray
  CharVec psi_exponent;           // basis * v / n
};

SublatticeData build_sublattice_data(const FanPtr& f, const CharVec& v,
                                     const Int& n) {
  SublatticeData out;
  out.basis = root_sublattice(f, v, n);
  Fan cf;
  cf.rank = f->rank;
  cf.cones = f->cones;
  for (const IntVec& e : f->rays) {
    Int ord = pairing(v, e);
    Int k = ramification_index(ord, n);
    out.ramification.push_back(k);
    IntVec scaled(e.size());
    for (size_t j = 0; j < e.size(); ++j) scaled[j] = k * e[j];
    IntVec coords = lattice_coordinates(out.basis, scaled);
    check(primitivize(coords).content == 1,
          "component ray primitive in N'-coordinates");
    cf.rays.push_back(std::move(coords));
  }
  out.component_fan = validate_fan(std::move(cf));
  // v/n in the dual basis of N': entries <v, b_i> / n.
  for (int i = 0; i < out.basis.rows(); ++i) {
    Int p = pairing(v, out.basis.row(i));
    check(divides(n, p), "v/n integral on N'");
    out.psi_exponent.push_back(p / n);
  }
  return out;
}

}  // namespace

QDivisor pullback_divisor(const FanPtr& f, const CharVec& v, const Int& n) {
  check(f != nullptr, "validated fan present");
  require_positive_n(n);
  SublatticeData sd = build_sublattice_data(f, v, n);
  std::vector<Rat> c;
  c.reserve(f->rays.size());
  for (const IntVec& e : f->rays) {
    Int ord = pairing(v, e);
    c.emplace_back(Int(ord / gcd(n, ord)));  // gcd(n, 0) = n
  }
  QDivisor pb(sd.component_fan, std::move(c));
  check(pb == div_char(sd.component_fan, sd.psi_exponent),
        "pullback agrees with div of chi^{v/n} on N'");
  return pb;
}

RootData normalized_char_root(const FanPtr& f, const CharVec& v,
                              const Int& n) {
  if (f == nullptr) fail("MalformedFan", "fan missing");
  require_positive_n(n);
  auto [n_prime, d] = char_root_order(f->rank, v, n);
  SublatticeData sd = build_sublattice_data(f, v, n);

  QDivisor big_d = div_char(f, v) * Rat(Int(1), n);
  std::vector<QDivisor> eigensheaves;
  bool flat = true;
  for (Int i = 0; i < n; ++i) {
    QDivisor floor_i = floor_div(big_d * Rat(i));
    if (!is_cartier(floor_i)) flat = false;
    eigensheaves.push_back(std::move(floor_i));
  }

  std::vector<Rat> pb_coeffs;
  for (const IntVec& e : f->rays) {
    Int ord = pairing(v, e);
    pb_coeffs.emplace_back(Int(ord / gcd(n, ord)));
  }
  QDivisor pullback(sd.component_fan, std::move(pb_coeffs));
  check(pullback == div_char(sd.component_fan, sd.psi_exponent),
        "pullback agrees with div of chi^{v/n} on N'");
  check(pullback.is_integral(), "pullback integral");

  RootData out{n,
               v,
               n_prime,
               d,
               sd.basis,
               sd.component_fan,
               sd.ramification,
               std::move(pullback),
               std::move(eigensheaves),
               flat,
               is_quasi_smooth(f),
               sd.psi_exponent};
  check(out.d * out.n_prime == n, "d * n' = n");
  Int basis_det = det(out.sublattice_basis);
  check(abs(basis_det) == out.n_prime, "|det N' basis| = n'");
  check(out.eigensheaves[0].is_zero(), "eigensheaf 0 is the zero divisor");
  for (const Int& r : out.ramification)
    check(divides(r, out.n_prime), "ramification divides n'");
  return out;
}

int epsilon(const Rat& d_coeff, const Int& i) {
  if (d_coeff.is_integral()) return 0;
  Rat shifted = d_coeff * Rat(i) + Rat(Int(1), d_coeff.denominator_order());
  return shifted.is_integral() ? 0 : 1;
}

std::vector<DecompRow> differential_decomposition(const QDivisor& d,
                                                  const std::vector<int>& sigma,
                                                  const Int& n,
                                                  DecompMode mode) {
  require_positive_n(n);
  for (int idx : sigma)
    if (idx < 0 || idx >= static_cast<int>(d.fan()->rays.size()))
      fail("BadInput", "sigma index out of range");
  std::vector<int> sig = sigma;
  std::sort(sig.begin(), sig.end());
  sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
  for (int idx : frac_support(d))
    if (!std::binary_search(sig.begin(), sig.end(), idx))
      fail("SigmaTooSmall",
           "sigma must contain the fractional support of the divisor");
  QDivisor nd = d * Rat(n);
  if (!nd.is_integral() || !is_principal(nd))
    fail("NotNTorsion", "n*D must be principal");

  std::vector<DecompRow> rows;
  for (Int i = 0; i < n; ++i) {
    QDivisor id = d * Rat(i);
    DecompRow row{i, mode, floor_div(id), {}};
    switch (mode) {
      case DecompMode::FormsLog:
      case DecompMode::DerivationsLog:
        row.log_support = sig;
        break;
      case DecompMode::Forms:
        row.log_support = frac_support(id);
        break;
      case DecompMode::Derivations:
        for (size_t e = 0; e < d.coeffs().size(); ++e)
          if (epsilon(d.coeffs()[e], i) == 1)
            row.log_support.push_back(static_cast<int>(e));
        break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Codim1Model codim1_model(const Int& n, const Int& m) {
  require_positive_n(n);
  Int g = m == 0 ? n : gcd(n, m);
  Int n_prime = n / g;
  Int m_prime = m / g;
  Int j = 0;
  for (Int cand = 1; cand <= n_prime; ++cand) {
    Int lhs = cand * m - g;
    if (divides(n, lhs)) { j = cand; break; }
  }
  check(j >= 1, "congruence j*m = g (mod n) solvable in [1, n']");
  return {n, m, g, n_prime, j, m_prime};
}

Codim1Coords codim1_decompose(const Codim1Model& model, const Int& i) {
  if (i < 0 || i >= model.n)
    fail("OutOfRange", "eigenindex must satisfy 0 <= i < n");
  // alpha = i * j^{-1} mod n'; j^{-1} = m' mod n' since j*m' == 1 (mod n').
  Int alpha = 0;
  if (model.n_prime > 1) {
    Int a;
    mpz_mod(a.get_mpz_t(), Int(i * model.m_prime).get_mpz_t(),
            model.n_prime.get_mpz_t());
    alpha = a;
  }
  Int rem = i - alpha * model.j;
  check(divides(model.n_prime, rem), "i - alpha*j divisible by n'");
  Int beta;
  mpz_mod(beta.get_mpz_t(), Int(rem / model.n_prime).get_mpz_t(),
          model.g.get_mpz_t());
  Int gamma_num = i - alpha * model.j - model.n_prime * beta;
  check(divides(model.n, gamma_num), "gamma integral");
  Int gamma = gamma_num / model.n;
  // ledger identity
  Int lhs = model.m * gamma + fdiv(model.j * model.m, model.n) * alpha +
            model.m_prime * beta;
  check(lhs == fdiv(i * model.m, model.n),
        "m*gamma + floor(jm/n)*alpha + m'*beta = floor(im/n)");
  return {alpha, beta, gamma};
}

const char* to_string(DecompMode m) {
  switch (m) {
    case DecompMode::FormsLog: return "forms-log";
    case DecompMode::Forms: return "forms";
    case DecompMode::Derivations: return "derivations";
    case DecompMode::DerivationsLog: return "derivations-log";
  }
  return "?";
}

}  // namespace cycov
