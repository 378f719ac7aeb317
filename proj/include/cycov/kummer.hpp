#pragma once

#include <string>
#include <vector>

#include "cycov/qdiv.hpp"

namespace cycov {

std::vector<Int> divisors_of(const Int& n);       // ascending
std::vector<Int> prime_divisors(const Int& n);    // ascending, distinct
Int euler_phi(const Int& n);

// Coefficients of the N-th cyclotomic polynomial, index = power of T.
std::vector<Int> cyclotomic_polynomial(const Int& n);

// Element of Q(zeta_N): polynomial in zeta_N reduced mod the N-th
// cyclotomic polynomial. Coefficient vector has length phi(N).
class CycloNum {
public:
  CycloNum() : level_(1), c_(1) {}
  static CycloNum rational(const Int& level, const Rat& r);
  static CycloNum zeta_power(const Int& level, const Int& k);  // zeta_N^k

  const Int& level() const { return level_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  // True iff the element lies in Q; writes the value when out is non-null.
  bool rational_value(Rat* out) const;

  CycloNum operator-() const;
  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum inverse() const;  // DivisionByZero on zero
  CycloNum pow(const Int& e) const;
  bool operator==(const CycloNum& o) const;

  std::string str() const;  // polynomial in "z"

private:
  CycloNum(Int level, std::vector<Rat> c)
      : level_(std::move(level)), c_(std::move(c)) {}
  static void reduce(const Int& level, std::vector<Rat>& c);
  Int level_;
  std::vector<Rat> c_;
};

// Polynomial over Q(zeta_N) in one variable T.
class CycloPoly {
public:
  explicit CycloPoly(Int level) : level_(std::move(level)) {}
  static CycloPoly constant(const CycloNum& c);
  // T^n - c
  static CycloPoly binomial(const Int& n, const CycloNum& c);

  const Int& level() const { return level_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  CycloNum coeff(int k) const;
  void set_coeff(int k, const CycloNum& value);

  CycloPoly operator+(const CycloPoly& o) const;
  CycloPoly operator-(const CycloPoly& o) const;
  CycloPoly operator*(const CycloPoly& o) const;
  bool operator==(const CycloPoly& o) const;
  bool is_zero() const { return c_.empty(); }

  // T -> xi * T
  CycloPoly substitute_scaled(const CycloNum& xi) const;
  // remainder mod T^n - f
  CycloPoly reduce_binomial(const Int& n, const CycloNum& f) const;

  std::string str(const std::string& var = "T") const;

private:
  void trim();
  Int level_;
  std::vector<CycloNum> c_;  // c_[k] multiplies T^k
};

// Realizes a primitive n-th root of unity inside Q(zeta_N); error
// LevelTooSmall when mu_n is not contained in that field.
CycloNum primitive_root_of_unity(const Int& n, const Int& level);

struct MaxRoot {
  Int d;  // maximal divisor of n with f a rational d-th power
  Rat g;  // g^d = f
};

MaxRoot max_root_divisor_Q(const Rat& f, const Int& n);

struct CapelliResult {
  bool irreducible;
  std::string reason;
};

// Irreducibility of T^n - f over Q: no prime p | n with f a rational p-th
// power, and not (4 | n and f = -4 x^4).
CapelliResult capelli_check(const Rat& f, const Int& n);
bool capelli_irreducible(const Rat& f, const Int& n);

struct KummerDecomp {
  Int n, d, n_prime;
  Rat f;
  CycloNum g;  // g^d = f, rational when certified
  Int level;
  bool maximality_certified;  // d certified maximal over Q
  std::vector<CycloNum> zetas;         // mu_d in factor order, zeta_d^k
  std::vector<CycloPoly> factors;      // T^{n'} - zeta*g
  std::vector<CycloPoly> idempotents;  // P_zeta, classes mod T^n - f
};

// Factorization T^n - f = prod (T^{n'} - zeta g) over Q(zeta_N) with the
// orthogonal idempotents of the product decomposition; every KummerDecomp
// invariant is verified exactly before returning.
KummerDecomp kummer_decompose(const Rat& f, const Int& n, const Int& level);

// Same with a caller-supplied root certificate (d, g): verifies g^d = f
// exactly but takes the maximality of d on faith.
KummerDecomp kummer_decompose_asserted(const Rat& f, const Int& n,
                                       const Int& level, const Int& d,
                                       const CycloNum& g);

// The permutation of factor indices induced by T -> xi*T for xi in mu_n:
// position i maps to galois_act(...)[i]. Verified against idempotent
// conjugation. Error NotRootOfUnity when xi^n != 1.
std::vector<int> galois_act(const KummerDecomp& decomp, const CycloNum& xi);

// prod_{0 <= i < j <= n-1} (zeta_n^j - zeta_n^i); a unit of Z[mu_n].
CycloNum vandermonde_unit(const Int& n, const Int& level);

// [floor((i/n) divf) for i = 0..n-1]: the integral-closure grading of the
// n-th root of a function with the given divisor.
std::vector<QDivisor> grading_divisors(const QDivisor& divf, const Int& n);

}  // namespace cycov
