#include "cycov/kummer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace cycov {

namespace {

unsigned long to_ulong(const Int& n, const char* what) {
  if (n < 0 || !n.fits_ulong_p())
    fail("BadN", std::string(what) + " out of range: " + n.get_str());
  return n.get_ui();
}

void require_positive(const Int& n, const char* what) {
  if (n < 1) fail("BadN", std::string(what) + " must be >= 1");
}

}  // namespace

std::vector<Int> divisors_of(const Int& n) {
  require_positive(n, "n");
  unsigned long m = to_ulong(n, "n");
  std::vector<Int> small, large;
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.emplace_back(d);
    if (d != m / d) large.emplace_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Int> prime_divisors(const Int& n) {
  require_positive(n, "n");
  unsigned long m = to_ulong(n, "n");
  std::vector<Int> ps;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    ps.emplace_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) ps.emplace_back(m);
  return ps;
}

Int euler_phi(const Int& n) {
  Int phi = n;
  for (const Int& p : prime_divisors(n)) phi = phi / p * (p - 1);
  return phi;
}

namespace {

// integer polynomial helpers, index = power
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division by a monic divisor; remainder must vanish
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
  check(!den.empty() && den.back() == 1, "monic divisor");
  ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  for (int k = static_cast<int>(num.size()) - 1;
       k >= static_cast<int>(den.size()) - 1; --k) {
    Int c = num[k];
    if (c == 0) continue;
    int shift = k - (static_cast<int>(den.size()) - 1);
    q[shift] = c;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  ztrim(num);
  check(num.empty(), "division exact");
  return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(const Int& n) {
  require_positive(n, "N");
  unsigned long m = to_ulong(n, "N");
  static std::map<unsigned long, ZPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [&](auto&& self, unsigned long k) -> const ZPoly& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    ZPoly p(k + 1);
    p[0] = -1;
    p[k] = 1;  // T^k - 1
    for (unsigned long d = 1; d < k; ++d)
      if (k % d == 0) p = zdiv_exact(std::move(p), self(self, d));
    return cache.emplace(k, std::move(p)).first->second;
  };
  return compute(compute, m);
}

namespace {

// rational polynomial helpers for arithmetic mod the cyclotomic polynomial
using QPoly = std::vector<Rat>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  qtrim(c);
  return c;
}

// num = q*den + r with deg r < deg den
void qdivmod(QPoly num, const QPoly& den, QPoly& q, QPoly& r) {
  check(!den.empty(), "division by nonzero polynomial");
  q.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat());
  const Rat& lead = den.back();
  for (int k = static_cast<int>(num.size()) - 1;
       k >= static_cast<int>(den.size()) - 1; --k) {
    if (num[k].is_zero()) continue;
    Rat c = num[k] / lead;
    int shift = k - (static_cast<int>(den.size()) - 1);
    q[shift] = c;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  qtrim(num);
  qtrim(q);
  r = std::move(num);
}

QPoly cyclo_qpoly(const Int& level) {
  ZPoly z = cyclotomic_polynomial(level);
  QPoly q(z.size());
  for (size_t i = 0; i < z.size(); ++i) q[i] = Rat(z[i]);
  return q;
}

size_t phi_of(const Int& level) {
  return to_ulong(euler_phi(level), "phi(N)");
}

}  // namespace

void CycloNum::reduce(const Int& level, std::vector<Rat>& c) {
  QPoly phi = cyclo_qpoly(level);
  QPoly q, r;
  qdivmod(std::move(c), phi, q, r);
  r.resize(phi.size() - 1);
  c = std::move(r);
}

CycloNum CycloNum::rational(const Int& level, const Rat& r) {
  require_positive(level, "N");
  std::vector<Rat> c(phi_of(level));
  c[0] = r;
  return CycloNum(level, std::move(c));
}

CycloNum CycloNum::zeta_power(const Int& level, const Int& k) {
  require_positive(level, "N");
  Int km;
  mpz_mod(km.get_mpz_t(), k.get_mpz_t(), level.get_mpz_t());
  std::vector<Rat> c(to_ulong(km, "exponent") + 1);
  c.back() = Rat(1);
  reduce(level, c);
  c.resize(phi_of(level));
  return CycloNum(level, std::move(c));
}

bool CycloNum::is_zero() const {
  for (const Rat& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycloNum::rational_value(Rat* out) const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  if (out) *out = c_[0];
  return true;
}

CycloNum CycloNum::operator-() const {
  std::vector<Rat> c(c_);
  for (Rat& x : c) x = -x;
  return CycloNum(level_, std::move(c));
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  check(level_ == o.level_, "cyclotomic arithmetic at one level");
  std::vector<Rat> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return CycloNum(level_, std::move(c));
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
  check(level_ == o.level_, "cyclotomic arithmetic at one level");
  std::vector<Rat> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return CycloNum(level_, std::move(c));
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  check(level_ == o.level_, "cyclotomic arithmetic at one level");
  QPoly a(c_), b(o.c_);
  qtrim(a);
  qtrim(b);
  QPoly prod = qmul(a, b);
  reduce(level_, prod);
  prod.resize(c_.size());
  return CycloNum(level_, std::move(prod));
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero in Q(zeta_N)");
  // extended Euclid against the cyclotomic polynomial
  QPoly r0 = cyclo_qpoly(level_), r1(c_);
  qtrim(r1);
  QPoly s0, s1{Rat(1)};
  while (r1.size() > 1) {
    QPoly q, r2;
    qdivmod(r0, r1, q, r2);
    QPoly s2 = s0;
    QPoly qs = qmul(q, s1);
    s2.resize(std::max(s2.size(), qs.size()));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    qtrim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  check(!r1.empty(), "gcd with the irreducible cyclotomic poly is constant");
  const Rat c = r1[0];
  for (Rat& x : s1) x /= c;
  reduce(level_, s1);
  s1.resize(c_.size());
  CycloNum inv(level_, std::move(s1));
  check((*this * inv).rational_value(nullptr) && (*this * inv).c_[0] == Rat(1),
        "inverse verified");
  return inv;
}

CycloNum CycloNum::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum base = *this;
  CycloNum acc = CycloNum::rational(level_, Rat(1));
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

bool CycloNum::operator==(const CycloNum& o) const {
  return level_ == o.level_ && c_ == o.c_;
}

std::string CycloNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rat a = c_[i];
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    if (i == 0) {
      os << a.str();
    } else {
      if (a != Rat(1)) os << a.str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

CycloPoly CycloPoly::constant(const CycloNum& c) {
  CycloPoly p(c.level());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

CycloPoly CycloPoly::binomial(const Int& n, const CycloNum& c) {
  require_positive(n, "degree");
  CycloPoly p(c.level());
  p.c_.assign(to_ulong(n, "degree") + 1, CycloNum::rational(c.level(), Rat()));
  p.c_[0] = -c;
  p.c_.back() = CycloNum::rational(c.level(), Rat(1));
  p.trim();
  return p;
}

CycloNum CycloPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return CycloNum::rational(level_, Rat());
  return c_[k];
}

void CycloPoly::set_coeff(int k, const CycloNum& value) {
  check(k >= 0, "nonnegative power");
  check(value.level() == level_, "coefficient level matches");
  if (static_cast<size_t>(k) >= c_.size())
    c_.resize(k + 1, CycloNum::rational(level_, Rat()));
  c_[k] = value;
  trim();
}

void CycloPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloPoly CycloPoly::operator+(const CycloPoly& o) const {
  check(level_ == o.level_, "polynomial arithmetic at one level");
  CycloPoly r(level_);
  r.c_.assign(std::max(c_.size(), o.c_.size()),
              CycloNum::rational(level_, Rat()));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
  r.trim();
  return r;
}

CycloPoly CycloPoly::operator-(const CycloPoly& o) const {
  check(level_ == o.level_, "polynomial arithmetic at one level");
  CycloPoly r(level_);
  r.c_.assign(std::max(c_.size(), o.c_.size()),
              CycloNum::rational(level_, Rat()));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
  r.trim();
  return r;
}

CycloPoly CycloPoly::operator*(const CycloPoly& o) const {
  check(level_ == o.level_, "polynomial arithmetic at one level");
  CycloPoly r(level_);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, CycloNum::rational(level_, Rat()));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

bool CycloPoly::operator==(const CycloPoly& o) const {
  return level_ == o.level_ && c_ == o.c_;
}

CycloPoly CycloPoly::substitute_scaled(const CycloNum& xi) const {
  CycloPoly r(level_);
  r.c_ = c_;
  CycloNum power = CycloNum::rational(level_, Rat(1));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i > 0) power = power * xi;
    r.c_[i] = r.c_[i] * power;
  }
  r.trim();
  return r;
}

CycloPoly CycloPoly::reduce_binomial(const Int& n, const CycloNum& f) const {
  require_positive(n, "modulus degree");
  size_t nn = to_ulong(n, "modulus degree");
  CycloPoly r(level_);
  r.c_ = c_;
  while (r.c_.size() > nn) {
    CycloNum top = r.c_.back();
    size_t k = r.c_.size() - 1;
    r.c_.pop_back();
    if (!top.is_zero()) r.c_[k - nn] = r.c_[k - nn] + top * f;
  }
  r.trim();
  return r;
}

std::string CycloPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const CycloNum& a = c_[k];
    if (a.is_zero()) continue;
    Rat r;
    bool is_rat = a.rational_value(&r);
    std::string term;
    if (k == 0) {
      term = is_rat ? r.str() : "(" + a.str() + ")";
    } else {
      std::string head;
      if (is_rat) {
        if (r == Rat(1)) head = "";
        else if (r == Rat(-1)) head = "-";
        else head = r.str() + "*";
      } else {
        head = "(" + a.str() + ")*";
      }
      term = head + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (first) {
      os << term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      os << " - " << term.substr(1);
    } else {
      os << " + " << term;
    }
  }
  return os.str();
}

CycloNum primitive_root_of_unity(const Int& n, const Int& level) {
  require_positive(n, "n");
  require_positive(level, "N");
  CycloNum z;
  if (divides(n, level)) {
    z = CycloNum::zeta_power(level, level / n);
  } else if (mpz_odd_p(level.get_mpz_t()) && divides(n, 2 * level)) {
    // zeta_{2N} = -zeta_N^{(N+1)/2}
    Int e = (level + 1) / 2 * (2 * level / n);
    z = CycloNum::zeta_power(level, e);
    if (mpz_odd_p(Int(2 * level / n).get_mpz_t())) z = -z;
  } else {
    fail("LevelTooSmall", "mu_" + n.get_str() + " is not contained in Q(zeta_" +
                              level.get_str() + ")");
  }
  const CycloNum one = CycloNum::rational(level, Rat(1));
  check(z.pow(n) == one, "n-th root of unity");
  for (const Int& p : prime_divisors(n))
    check(!(z.pow(n / p) == one), "primitive n-th root of unity");
  return z;
}

namespace {

bool rational_dth_root(const Rat& f, const Int& d, Rat* out) {
  check(d >= 1, "positive root degree");
  if (d == 1) {
    *out = f;
    return true;
  }
  unsigned long du = to_ulong(d, "root degree");
  if (f.sign() < 0 && du % 2 == 0) return false;
  Int rn, rd;
  int exact_num = mpz_root(rn.get_mpz_t(), f.num().get_mpz_t(), du);
  int exact_den = mpz_root(rd.get_mpz_t(), f.den().get_mpz_t(), du);
  if (!exact_num || !exact_den) return false;
  *out = Rat(rn, rd);
  return true;
}

}  // namespace

MaxRoot max_root_divisor_Q(const Rat& f, const Int& n) {
  if (f.is_zero()) fail("ZeroInput", "f must be nonzero");
  require_positive(n, "n");
  std::vector<Int> ds = divisors_of(n);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    Rat g;
    if (rational_dth_root(f, *it, &g)) return {*it, g};
  }
  check(false, "d = 1 always admits a root");
  return {};
}

CapelliResult capelli_check(const Rat& f, const Int& n) {
  if (f.is_zero()) fail("ZeroInput", "f must be nonzero");
  require_positive(n, "n");
  for (const Int& p : prime_divisors(n)) {
    Rat g;
    if (rational_dth_root(f, p, &g))
      return {false, "f = (" + g.str() + ")^" + p.get_str() + " with prime " +
                         p.get_str() + " | n"};
  }
  if (divides(Int(4), n)) {
    Rat x;
    if (f.sign() < 0 && rational_dth_root(-f / Rat(4), Int(4), &x))
      return {false,
              "f = -4*(" + x.str() + ")^4 and 4 | n (Capelli exception)"};
  }
  return {true, "f is not a rational p-th power for any prime p | n, and not "
                "of the form -4*x^4 with 4 | n"};
}

bool capelli_irreducible(const Rat& f, const Int& n) {
  return capelli_check(f, n).irreducible;
}

namespace {

KummerDecomp decompose_impl(const Rat& f, const Int& n, const Int& level,
                            const Int& d, const CycloNum& g, bool certified) {
  check(divides(d, n), "d divides n");
  Int n_prime = n / d;
  CycloNum zeta_d = primitive_root_of_unity(d, level);
  const CycloNum one = CycloNum::rational(level, Rat(1));
  const CycloNum f_c = CycloNum::rational(level, f);
  check(g.pow(d) == f_c, "g^d = f");

  KummerDecomp out;
  out.n = n;
  out.d = d;
  out.n_prime = n_prime;
  out.f = f;
  out.g = g;
  out.level = level;
  out.maximality_certified = certified;
  for (Int k = 0; k < d; ++k) out.zetas.push_back(zeta_d.pow(k));
  for (const CycloNum& z : out.zetas)
    out.factors.push_back(CycloPoly::binomial(n_prime, z * g));

  CycloPoly prod = CycloPoly::constant(one);
  for (const CycloPoly& fac : out.factors) prod = prod * fac;
  check(prod == CycloPoly::binomial(n, f_c), "factor product is T^n - f");

  if (d == 1) {
    out.idempotents.push_back(CycloPoly::constant(one));
  } else {
    for (size_t k = 0; k < out.zetas.size(); ++k) {
      CycloPoly q = CycloPoly::constant(one);
      CycloNum den = one;
      for (size_t l = 0; l < out.zetas.size(); ++l) {
        if (l == k) continue;
        q = q * out.factors[l];
        den = den * (out.zetas[k] * g - out.zetas[l] * g);
      }
      check(!den.is_zero(), "idempotent denominator nonzero");
      out.idempotents.push_back(q * CycloPoly::constant(den.inverse()));
    }
  }

  // exact verification: sum to 1, idempotent, pairwise orthogonal
  CycloPoly sum(level);
  for (const CycloPoly& p : out.idempotents) sum = sum + p;
  check(sum == CycloPoly::constant(one), "idempotents sum to 1");
  for (size_t a = 0; a < out.idempotents.size(); ++a)
    for (size_t b = a; b < out.idempotents.size(); ++b) {
      CycloPoly pq =
          (out.idempotents[a] * out.idempotents[b]).reduce_binomial(n, f_c);
      if (a == b)
        check(pq == out.idempotents[a], "idempotent squares to itself");
      else
        check(pq.is_zero(), "distinct idempotents orthogonal");
    }
  return out;
}

}  // namespace

KummerDecomp kummer_decompose(const Rat& f, const Int& n, const Int& level) {
  MaxRoot mr = max_root_divisor_Q(f, n);
  return decompose_impl(f, n, level, mr.d,
                        CycloNum::rational(level, mr.g), true);
}

KummerDecomp kummer_decompose_asserted(const Rat& f, const Int& n,
                                       const Int& level, const Int& d,
                                       const CycloNum& g) {
  if (f.is_zero()) fail("ZeroInput", "f must be nonzero");
  require_positive(n, "n");
  if (d < 1 || !divides(d, n))
    fail("BadInput", "claimed d must divide n");
  if (!(g.pow(d) == CycloNum::rational(level, f)))
    fail("BadInput", "claimed root does not satisfy g^d = f");
  return decompose_impl(f, n, level, d, g, false);
}

std::vector<int> galois_act(const KummerDecomp& decomp, const CycloNum& xi) {
  if (xi.level() != decomp.level)
    fail("NotRootOfUnity", "xi lives at cyclotomic level " +
                               xi.level().get_str() + ", decomposition at " +
                               decomp.level.get_str());
  const CycloNum one = CycloNum::rational(decomp.level, Rat(1));
  if (!(xi.pow(decomp.n) == one))
    fail("NotRootOfUnity", "xi^n != 1");
  CycloNum shift = xi.pow(decomp.n_prime);
  std::vector<int> perm(decomp.zetas.size(), -1);
  for (size_t i = 0; i < decomp.zetas.size(); ++i) {
    CycloNum target = shift * decomp.zetas[i];
    for (size_t j = 0; j < decomp.zetas.size(); ++j)
      if (decomp.zetas[j] == target) { perm[i] = static_cast<int>(j); break; }
    check(perm[i] >= 0, "xi^{n'} zeta stays in mu_d");
  }
  // conjugation check: P_{perm[i]} composed with T -> xi T equals P_i
  const CycloNum f_c = CycloNum::rational(decomp.level, decomp.f);
  for (size_t i = 0; i < decomp.idempotents.size(); ++i) {
    CycloPoly conj = decomp.idempotents[perm[i]]
                         .substitute_scaled(xi)
                         .reduce_binomial(decomp.n, f_c);
    check(conj == decomp.idempotents[i],
          "permutation matches idempotent conjugation");
  }
  return perm;
}

CycloNum vandermonde_unit(const Int& n, const Int& level) {
  require_positive(n, "n");
  CycloNum zeta = primitive_root_of_unity(n, level);
  std::vector<CycloNum> zs;
  for (Int k = 0; k < n; ++k) zs.push_back(zeta.pow(k));
  CycloNum prod = CycloNum::rational(level, Rat(1));
  for (size_t i = 0; i < zs.size(); ++i)
    for (size_t j = i + 1; j < zs.size(); ++j) prod = prod * (zs[j] - zs[i]);
  check(!prod.is_zero(), "Vandermonde determinant nonzero");
  return prod;
}

std::vector<QDivisor> grading_divisors(const QDivisor& divf, const Int& n) {
  require_positive(n, "n");
  std::vector<QDivisor> out;
  for (Int i = 0; i < n; ++i)
    out.push_back(floor_div(divf * Rat(i, n)));
  return out;
}

}  // namespace cycov
