#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycov {

// Arbitrary-precision integer. All arithmetic in this library is exact;
// there is no fixed-width fast path.
using Int = mpz_class;
using IntVec = std::vector<Int>;

// Domain-level failure (bad input, unsatisfiable request). The name is a
// stable machine-readable token; the CLI reports it verbatim.
class domain_error : public std::runtime_error {
public:
  domain_error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& detail) {
  throw domain_error(name, detail);
}

// Internal invariant check; a failure here is a library bug, not bad input.
inline void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("invariant violated: ") + what);
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// g = x*a + y*b
inline void gcd_ext(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

// floor(a / b), b != 0
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact rational, always in lowest terms with positive denominator.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) {
    if (den == 0) fail("DivisionByZero", "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p/q" or "p".
  static Rat parse(const std::string& s);

  Int num() const { return Int(v_.get_num()); }
  Int den() const { return Int(v_.get_den()); }
  bool is_integral() const { return v_.get_den() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(),
               v_.get_den().get_mpz_t());
    return q;
  }
  // Fractional part in [0, 1): *this - floor().
  Rat frac() const { return *this - Rat(floor()); }
  // Minimal r >= 1 with r * (*this) integral.
  Int denominator_order() const { return den(); }

  std::string str() const {
    if (is_integral()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.v_ == 0) fail("DivisionByZero", "rational division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // canonical at all times
};

// Dense integer matrix, row-major. Dimensions are fixed at construction;
// no implicit truncation ever occurs.
class IntMat {
public:
  IntMat() = default;
  IntMat(int rows, int cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    check(rows >= 0 && cols >= 0, "matrix dimensions nonnegative");
  }
  IntMat(int rows, int cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    check(e_.size() == static_cast<size_t>(rows) * static_cast<size_t>(cols),
          "entry count matches dimensions");
  }
  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return e_[idx(i, j)]; }
  const Int& at(int i, int j) const { return e_[idx(i, j)]; }
  IntVec row(int i) const;
  IntMat transpose() const;

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend IntVec operator*(const IntMat& a, const IntVec& x);
  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

private:
  size_t idx(int i, int j) const {
    check(i >= 0 && i < rows_ && j >= 0 && j < cols_, "index in range");
    return static_cast<size_t>(i) * cols_ + j;
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> e_;
};

struct HnfResult {
  IntMat h;  // row-style Hermite form of a
  IntMat u;  // unimodular, h = u * a
};

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows trailing.
HnfResult hermite_normal_form(const IntMat& a);

struct SnfResult {
  IntMat u;  // unimodular
  IntMat s;  // diagonal, s1 | s2 | ... >= 0, s = u * a * v
  IntMat v;  // unimodular
};

SnfResult smith_normal_form(const IntMat& a);

// Some integer solution of a*x = b, or nullopt if none exists.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

struct Primitivized {
  IntVec p;     // gcd of entries is 1
  Int content;  // > 0, v = content * p
};

Primitivized primitivize(const IntVec& v);

// Index [Z^cols : rowspan(basis)]; nullopt when the rows do not span a
// finite-index sublattice.
std::optional<Int> sublattice_index(const IntMat& basis);

// Exact determinant (Bareiss), square matrices only.
Int det(const IntMat& a);

int rank(const IntMat& a);

// Rows generate {x : a*x = 0}.
IntMat integer_kernel(const IntMat& a);

}  // namespace cycov
