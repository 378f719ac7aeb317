#include <doctest.h>

#include <complex>
#include <vector>

#include "cycov/kummer.hpp"

using namespace cycov;

namespace {

std::vector<Int> zp(std::vector<long> es) {
  std::vector<Int> v;
  for (long e : es) v.emplace_back(e);
  return v;
}

// Exact division check over Z: does the monic integer polynomial div divide
// T^n - f?
bool divides_binomial(const std::vector<Int>& div, long n, const Int& f) {
  std::vector<Int> num(n + 1);
  num[0] = -f;
  num[n] = 1;
  std::vector<Int> rem = num;
  const int dd = static_cast<int>(div.size()) - 1;
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    Int c = rem[k];
    if (c == 0) continue;
    int shift = k - dd;
    for (size_t j = 0; j < div.size(); ++j) rem[shift + j] -= c * div[j];
  }
  for (const Int& c : rem)
    if (c != 0) return false;
  return true;
}

// Independent irreducibility oracle for T^n - F with integer F: group the
// complex roots into proper subsets, spot near-integer coefficient vectors
// with floating point, then certify candidates by exact integer division.
bool oracle_reducible_int(const Int& F, long n) {
  if (n == 1) return false;
  double fd = mpz_get_d(F.get_mpz_t());
  double radius = std::pow(std::abs(fd), 1.0 / n);
  const double pi = 3.14159265358979323846;
  std::vector<std::complex<double>> roots;
  for (long k = 0; k < n; ++k) {
    double angle = fd >= 0 ? 2 * pi * k / n : (2 * k + 1) * pi / n;
    roots.push_back(std::polar(radius, angle));
  }
  for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
    std::vector<std::complex<double>> poly{1.0};
    for (long k = 0; k < n; ++k) {
      if (!(mask >> k & 1)) continue;
      poly.push_back(0.0);
      for (size_t j = poly.size() - 1; j > 0; --j)
        poly[j] = poly[j - 1] - roots[k] * poly[j];
      poly[0] = -roots[k] * poly[0];
    }
    std::vector<Int> cand(poly.size());  // ascending, cand.back() leading
    bool near_integer = true;
    for (size_t j = 0; j < poly.size(); ++j) {
      if (std::abs(poly[j].imag()) > 1e-6 ||
          std::abs(poly[j].real() - std::round(poly[j].real())) > 1e-6) {
        near_integer = false;
        break;
      }
      cand[j] = Int(static_cast<long>(std::llround(poly[j].real())));
    }
    if (!near_integer || cand.back() != 1) continue;
    if (divides_binomial(cand, n, F)) return true;
  }
  return false;
}

bool oracle_irreducible(const Rat& f, long n) {
  // T^n - p/q irreducible over Q iff Y^n - p q^{n-1} is (substitute Y = qT)
  Int F = f.num();
  for (long i = 0; i + 1 < n; ++i) F *= f.den();
  return !oracle_reducible_int(F, n);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == zp({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == zp({1, 1}));
  CHECK(cyclotomic_polynomial(4) == zp({1, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == zp({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(9) == zp({1, 0, 0, 1, 0, 0, 1}));
  CHECK_THROWS_WITH_AS(cyclotomic_polynomial(0), doctest::Contains("BadN"),
                       domain_error);
}

TEST_CASE("cyclotomic arithmetic") {
  CycloNum i = CycloNum::zeta_power(4, 1);
  CycloNum minus1 = CycloNum::rational(4, Rat(-1));
  CHECK(i * i == minus1);
  CHECK(i.pow(4) == CycloNum::rational(4, Rat(1)));

  CycloNum a = CycloNum::rational(4, Rat(1)) + i;  // 1 + i
  CycloNum b = a.inverse();
  CHECK(a * b == CycloNum::rational(4, Rat(1)));
  CHECK(a.pow(4) == CycloNum::rational(4, Rat(-4)));  // (1+i)^4 = -4

  Rat r;
  CHECK(minus1.rational_value(&r));
  CHECK(r == Rat(-1));
  CHECK(!i.rational_value(nullptr));

  CycloNum z9 = CycloNum::zeta_power(9, 1);
  CHECK(z9.pow(9) == CycloNum::rational(9, Rat(1)));
  CHECK(z9.pow(-2) * z9.pow(2) == CycloNum::rational(9, Rat(1)));
  CHECK_THROWS_WITH_AS(CycloNum::rational(4, Rat(0)).inverse(),
                       doctest::Contains("DivisionByZero"), domain_error);
}

TEST_CASE("primitive roots of unity at odd levels") {
  // mu_2 inside Q = Q(zeta_1), mu_6 inside Q(zeta_3)
  CycloNum m1 = primitive_root_of_unity(2, 1);
  Rat r;
  CHECK(m1.rational_value(&r));
  CHECK(r == Rat(-1));
  CycloNum z6 = primitive_root_of_unity(6, 3);
  CHECK(z6.pow(6) == CycloNum::rational(3, Rat(1)));
  CHECK(!(z6.pow(3) == CycloNum::rational(3, Rat(1))));
  CHECK(!(z6.pow(2) == CycloNum::rational(3, Rat(1))));
  CHECK_THROWS_WITH_AS(primitive_root_of_unity(4, 2),
                       doctest::Contains("LevelTooSmall"), domain_error);
}

TEST_CASE("max_root_divisor_Q") {
  MaxRoot a = max_root_divisor_Q(Rat(16), 4);
  CHECK(a.d == 4);
  CHECK(a.g == Rat(2));
  MaxRoot b = max_root_divisor_Q(Rat(Int(8), Int(27)), 6);
  CHECK(b.d == 3);
  CHECK(b.g == Rat(Int(2), Int(3)));
  MaxRoot c = max_root_divisor_Q(Rat(-4), 4);
  CHECK(c.d == 1);
  CHECK(c.g == Rat(-4));
  MaxRoot e = max_root_divisor_Q(Rat(-8), 6);
  CHECK(e.d == 3);
  CHECK(e.g == Rat(-2));
  MaxRoot one = max_root_divisor_Q(Rat(1), 6);
  CHECK(one.d == 6);
  CHECK(one.g == Rat(1));
  MaxRoot neg = max_root_divisor_Q(Rat(-1), 6);
  CHECK(neg.d == 3);
  CHECK(neg.g == Rat(-1));
  CHECK_THROWS_WITH_AS(max_root_divisor_Q(Rat(0), 3),
                       doctest::Contains("ZeroInput"), domain_error);
}

TEST_CASE("capelli spec cases") {
  CHECK(capelli_irreducible(Rat(2), 2));
  CHECK(!capelli_irreducible(Rat(-4), 4));
  CHECK(!capelli_irreducible(Rat(16), 4));
  CapelliResult r = capelli_check(Rat(-4), 4);
  CHECK(!r.irreducible);
  CHECK(r.reason.find("-4") != std::string::npos);
  CHECK(r.reason.find("4 | n") != std::string::npos);
}

TEST_CASE("capelli against the complex-subset factoring oracle") {
  std::vector<Rat> fs{Rat(1),  Rat(-1), Rat(2),  Rat(-2),          Rat(4),
                      Rat(-4), Rat(8),  Rat(-8), Rat(16),          Rat(Int(1), Int(2)),
                      Rat(Int(8), Int(27)), Rat(3), Rat(-27), Rat(Int(9), Int(4))};
  for (const Rat& f : fs)
    for (long n = 1; n <= 8; ++n) {
      bool expect = oracle_irreducible(f, n);
      CHECK_MESSAGE(capelli_irreducible(f, Int(n)) == expect,
                    "f = ", f.str(), ", n = ", n);
    }
}

TEST_CASE("capelli equivalence with max_root_divisor_Q") {
  std::vector<Rat> fs{Rat(1),  Rat(-1), Rat(2),  Rat(-2), Rat(4), Rat(-4),
                      Rat(8),  Rat(-8), Rat(16), Rat(Int(1), Int(2)),
                      Rat(Int(8), Int(27))};
  for (const Rat& f : fs)
    for (long n = 1; n <= 8; ++n) {
      bool d_is_one = max_root_divisor_Q(f, n).d == 1;
      bool capelli_exception = false;
      if (n % 4 == 0 && f.sign() < 0)
        capelli_exception = max_root_divisor_Q(-f / Rat(4), 4).d == 4;
      CHECK(capelli_irreducible(f, n) == (d_is_one && !capelli_exception));
    }
}

TEST_CASE("kummer decomposition of T^4 - 16 over Q(i)") {
  KummerDecomp k = kummer_decompose(Rat(16), 4, 4);
  CHECK(k.d == 4);
  CHECK(k.n_prime == 1);
  CHECK(k.maximality_certified);
  REQUIRE(k.factors.size() == 4);
  // constants are -2 zeta_4^k: -2, -2i, 2, 2i
  CycloNum i = CycloNum::zeta_power(4, 1);
  CycloNum two = CycloNum::rational(4, Rat(2));
  CHECK(k.factors[0].coeff(0) == -two);
  CHECK(k.factors[1].coeff(0) == -(two * i));
  CHECK(k.factors[2].coeff(0) == two);
  CHECK(k.factors[3].coeff(0) == two * i);
  REQUIRE(k.idempotents.size() == 4);
}

TEST_CASE("kummer decomposition trivial and totally split cases") {
  KummerDecomp single = kummer_decompose(Rat(2), 2, 1);
  CHECK(single.d == 1);
  CHECK(single.n_prime == 2);
  REQUIRE(single.factors.size() == 1);
  CHECK(single.factors[0].degree() == 2);
  REQUIRE(single.idempotents.size() == 1);
  CHECK(single.idempotents[0].degree() == 0);

  KummerDecomp split = kummer_decompose(Rat(1), 3, 3);
  CHECK(split.d == 3);
  CHECK(split.n_prime == 1);
  CHECK(split.factors.size() == 3);
  CHECK(split.idempotents.size() == 3);

  CHECK_THROWS_WITH_AS(kummer_decompose(Rat(16), 4, 2),
                       doctest::Contains("LevelTooSmall"), domain_error);
}

TEST_CASE("kummer decomposition invariants across the sweep") {
  // all decomposition identities (product, idempotent completeness,
  // orthogonality, idempotency) are verified exactly inside the call
  std::vector<Rat> fs{Rat(1),  Rat(-1), Rat(2),  Rat(-2), Rat(4), Rat(-4),
                      Rat(8),  Rat(-8), Rat(16), Rat(Int(1), Int(2)),
                      Rat(Int(8), Int(27))};
  for (const Rat& f : fs)
    for (long n = 1; n <= 8; ++n) {
      Int d = max_root_divisor_Q(f, n).d;
      Int level = 1;
      while (!(divides(d, level) ||
               (mpz_odd_p(level.get_mpz_t()) && divides(d, 2 * level))))
        ++level;
      KummerDecomp k = kummer_decompose(f, n, level);
      CHECK(k.d * k.n_prime == n);
      CHECK(static_cast<long>(k.factors.size()) == k.d.get_si());
    }
}

TEST_CASE("asserted decomposition: fourth root of -4 in Q(i)") {
  CycloNum g = CycloNum::rational(4, Rat(1)) + CycloNum::zeta_power(4, 1);
  KummerDecomp k = kummer_decompose_asserted(Rat(-4), 4, 4, 4, g);
  CHECK(!k.maximality_certified);
  CHECK(k.d == 4);
  CHECK(k.factors.size() == 4);

  CycloNum wrong = CycloNum::rational(4, Rat(3));
  CHECK_THROWS_WITH_AS(kummer_decompose_asserted(Rat(-4), 4, 4, 4, wrong),
                       doctest::Contains("BadInput"), domain_error);
}

TEST_CASE("galois action") {
  KummerDecomp k = kummer_decompose(Rat(16), 4, 4);  // d = 4, n' = 1
  CycloNum i = CycloNum::zeta_power(4, 1);
  std::vector<int> perm = galois_act(k, i);
  CHECK(perm == std::vector<int>{1, 2, 3, 0});  // 4-cycle
  CHECK(galois_act(k, CycloNum::rational(4, Rat(1))) ==
        std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_WITH_AS(galois_act(k, CycloNum::rational(4, Rat(2))),
                       doctest::Contains("NotRootOfUnity"), domain_error);

  // d | n': mu_d acts trivially (f = 4, n = 8: d = 2, n' = 4)
  KummerDecomp t = kummer_decompose(Rat(4), 8, 8);
  CHECK(t.d == 2);
  CHECK(t.n_prime == 4);
  CycloNum m1 = CycloNum::rational(8, Rat(-1));
  CHECK(galois_act(t, m1) == std::vector<int>{0, 1});
  // ...but mu_n still acts transitively
  CycloNum z8 = CycloNum::zeta_power(8, 1);
  CHECK(galois_act(t, z8) == std::vector<int>{1, 0});
}

TEST_CASE("vandermonde units") {
  Rat r;
  CHECK(vandermonde_unit(2, 1).rational_value(&r));
  CHECK(r == Rat(-2));
  CHECK(vandermonde_unit(1, 1).rational_value(&r));
  CHECK(r == Rat(1));

  CycloNum v3 = vandermonde_unit(3, 3);
  CHECK(!v3.is_zero());
  // the square of the Vandermonde of the roots of T^3 - 1 is its
  // discriminant, -27
  CHECK(v3 * v3 == CycloNum::rational(3, Rat(-27)));
}
