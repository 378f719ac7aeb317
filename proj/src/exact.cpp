#include "cycov/exact.hpp"

#include <algorithm>

namespace cycov {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) fail("MalformedRational", "empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail("MalformedRational", "zero denominator in \"" + s + "\"");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    fail("MalformedRational", "cannot parse \"" + s + "\"");
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  check(!rows.empty(), "from_rows needs at least one row");
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    check(rows[i].size() == static_cast<size_t>(m.cols()),
          "ragged row list");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMat::row(int i) const {
  IntVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  check(a.cols() == b.rows(), "matrix product dimensions");
  IntMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec operator*(const IntMat& a, const IntVec& x) {
  check(static_cast<size_t>(a.cols()) == x.size(),
        "matrix-vector product dimensions");
  IntVec y(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

namespace {

void row_swap(IntMat& m, int r1, int r2) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r1, j), m.at(r2, j));
}

void row_negate(IntMat& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// m[dst] += c * m[src]
void row_axpy(IntMat& m, int dst, int src, const Int& c) {
  for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
}

// Unimodular transform on rows (r1, r2) making m(r2, c) = 0 and
// m(r1, c) = gcd of the two entries. Mirrored onto u. When the pivot
// divides the target the transform is a plain axpy, so a pivot of +-1 never
// gets rewritten (gmp may otherwise return cofactors that swap the rows,
// which can cycle against the matching column step).
void rows_gcd_step(IntMat& m, IntMat& u, int r1, int r2, int c) {
  const Int a = m.at(r1, c), b = m.at(r2, c);
  if (b == 0) return;
  if (a != 0 && divides(a, b)) {
    const Int q = b / a;
    row_axpy(m, r2, r1, -q);
    row_axpy(u, r2, r1, -q);
    return;
  }
  Int g, x, y;
  gcd_ext(a, b, g, x, y);
  const Int ag = a / g, bg = b / g;
  for (int j = 0; j < m.cols(); ++j) {
    Int m1 = x * m.at(r1, j) + y * m.at(r2, j);
    Int m2 = ag * m.at(r2, j) - bg * m.at(r1, j);
    m.at(r1, j) = m1;
    m.at(r2, j) = m2;
  }
  for (int j = 0; j < u.cols(); ++j) {
    Int u1 = x * u.at(r1, j) + y * u.at(r2, j);
    Int u2 = ag * u.at(r2, j) - bg * u.at(r1, j);
    u.at(r1, j) = u1;
    u.at(r2, j) = u2;
  }
}

void col_swap(IntMat& m, int c1, int c2) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, c1), m.at(i, c2));
}

// Column analogue of rows_gcd_step at row r: m(r, c2) = 0 afterward.
void cols_gcd_step(IntMat& m, IntMat& v, int c1, int c2, int r) {
  const Int a = m.at(r, c1), b = m.at(r, c2);
  if (b == 0) return;
  if (a != 0 && divides(a, b)) {
    const Int q = b / a;
    for (int i = 0; i < m.rows(); ++i) m.at(i, c2) -= q * m.at(i, c1);
    for (int i = 0; i < v.rows(); ++i) v.at(i, c2) -= q * v.at(i, c1);
    return;
  }
  Int g, x, y;
  gcd_ext(a, b, g, x, y);
  const Int ag = a / g, bg = b / g;
  for (int i = 0; i < m.rows(); ++i) {
    Int m1 = x * m.at(i, c1) + y * m.at(i, c2);
    Int m2 = ag * m.at(i, c2) - bg * m.at(i, c1);
    m.at(i, c1) = m1;
    m.at(i, c2) = m2;
  }
  for (int i = 0; i < v.rows(); ++i) {
    Int v1 = x * v.at(i, c1) + y * v.at(i, c2);
    Int v2 = ag * v.at(i, c2) - bg * v.at(i, c1);
    v.at(i, c1) = v1;
    v.at(i, c2) = v2;
  }
}

void require_nonempty(const IntMat& a, const char* op) {
  if (a.rows() == 0 || a.cols() == 0)
    fail("EmptyMatrix", std::string(op) + " on an empty matrix");
}

}  // namespace

HnfResult hermite_normal_form(const IntMat& a) {
  require_nonempty(a, "hermite_normal_form");
  IntMat h = a;
  IntMat u = IntMat::identity(a.rows());
  int r = 0;
  for (int c = 0; c < h.cols() && r < h.rows(); ++c) {
    int p = -1;
    for (int i = r; i < h.rows(); ++i)
      if (h.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) { row_swap(h, p, r); row_swap(u, p, r); }
    for (int i = r + 1; i < h.rows(); ++i) rows_gcd_step(h, u, r, i, c);
    if (h.at(r, c) < 0) { row_negate(h, r); row_negate(u, r); }
    for (int i = 0; i < r; ++i) {
      Int q = fdiv(h.at(i, c), h.at(r, c));
      if (q != 0) { row_axpy(h, i, r, -q); row_axpy(u, i, r, -q); }
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SnfResult smith_normal_form(const IntMat& a) {
  require_nonempty(a, "smith_normal_form");
  IntMat s = a;
  IntMat u = IntMat::identity(a.rows());
  IntMat v = IntMat::identity(a.cols());
  const int k = std::min(s.rows(), s.cols());

  auto clear_cross = [&](int t) {
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = t + 1; i < s.rows(); ++i)
        if (s.at(i, t) != 0) rows_gcd_step(s, u, t, i, t);
      for (int j = t + 1; j < s.cols(); ++j)
        if (s.at(t, j) != 0) cols_gcd_step(s, v, t, j, t);
      for (int i = t + 1; i < s.rows(); ++i)
        if (s.at(i, t) != 0) dirty = true;
    }
  };

  for (int t = 0; t < k; ++t) {
    // smallest nonzero entry of the trailing block to (t, t)
    int pi = -1, pj = -1;
    for (int i = t; i < s.rows(); ++i)
      for (int j = t; j < s.cols(); ++j) {
        if (s.at(i, j) == 0) continue;
        if (pi < 0 || mpz_cmpabs(s.at(i, j).get_mpz_t(),
                                 s.at(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) { row_swap(s, pi, t); row_swap(u, pi, t); }
    if (pj != t) { col_swap(s, pj, t); col_swap(v, pj, t); }
    clear_cross(t);
  }
  for (int t = 0; t < k; ++t)
    if (s.at(t, t) < 0) { row_negate(s, t); row_negate(u, t); }

  // enforce s1 | s2 | ...
  for (bool changed = true; changed;) {
    changed = false;
    for (int t = 0; t + 1 < k; ++t) {
      const Int a0 = s.at(t, t), b0 = s.at(t + 1, t + 1);
      if (b0 == 0) continue;
      if (a0 != 0 && divides(a0, b0)) continue;
      row_axpy(s, t, t + 1, 1);
      row_axpy(u, t, t + 1, 1);
      clear_cross(t);
      if (s.at(t, t) < 0) { row_negate(s, t); row_negate(u, t); }
      if (s.at(t + 1, t + 1) < 0) { row_negate(s, t + 1); row_negate(u, t + 1); }
      changed = true;
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
  require_nonempty(a, "solve_integer");
  if (b.size() != static_cast<size_t>(a.rows()))
    fail("DimensionMismatch", "right-hand side length does not match rows");
  SnfResult snf = smith_normal_form(a);
  IntVec c = snf.u * b;
  const int k = std::min(a.rows(), a.cols());
  IntVec y(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    const Int si = i < k ? snf.s.at(i, i) : Int(0);
    if (si != 0) {
      if (!divides(si, c[i])) return std::nullopt;
      y[i] = c[i] / si;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntVec x = snf.v * y;
  check(a * x == b, "solve_integer solution satisfies a*x = b");
  return x;
}

Primitivized primitivize(const IntVec& v) {
  Int content = 0;
  for (const Int& e : v) content = gcd(content, e);
  if (content == 0) fail("ZeroVector", "primitivize of the zero vector");
  IntVec p(v.size());
  for (size_t i = 0; i < v.size(); ++i) p[i] = v[i] / content;
  return {std::move(p), std::move(content)};
}

std::optional<Int> sublattice_index(const IntMat& basis) {
  require_nonempty(basis, "sublattice_index");
  HnfResult hnf = hermite_normal_form(basis);
  Int index = 1;
  int nonzero_rows = 0;
  for (int i = 0; i < hnf.h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < hnf.h.cols(); ++j)
      if (hnf.h.at(i, j) != 0) { zero = false; break; }
    if (!zero) ++nonzero_rows;
  }
  if (nonzero_rows < hnf.h.cols()) return std::nullopt;
  for (int j = 0; j < hnf.h.cols(); ++j) index *= hnf.h.at(j, j);
  check(index > 0, "HNF pivots positive");
  return index;
}

Int det(const IntMat& a) {
  check(a.rows() == a.cols(), "determinant of a square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int sign = 1, prev = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (m.at(t, t) == 0) {
      int p = -1;
      for (int i = t + 1; i < n; ++i)
        if (m.at(i, t) != 0) { p = i; break; }
      if (p < 0) return 0;
      row_swap(m, p, t);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i) {
      for (int j = t + 1; j < n; ++j) {
        Int num = m.at(t, t) * m.at(i, j) - m.at(i, t) * m.at(t, j);
        m.at(i, j) = num / prev;  // Bareiss: division is exact
      }
      m.at(i, t) = 0;
    }
    prev = m.at(t, t);
  }
  return sign * m.at(n - 1, n - 1);
}

int rank(const IntMat& a) {
  HnfResult hnf = hermite_normal_form(a);
  int r = 0;
  for (int i = 0; i < hnf.h.rows(); ++i)
    for (int j = 0; j < hnf.h.cols(); ++j)
      if (hnf.h.at(i, j) != 0) { ++r; break; }
  return r;
}

IntMat integer_kernel(const IntMat& a) {
  SnfResult snf = smith_normal_form(a);
  const int k = std::min(a.rows(), a.cols());
  std::vector<int> free_cols;
  for (int j = 0; j < a.cols(); ++j)
    if (j >= k || snf.s.at(j, j) == 0) free_cols.push_back(j);
  IntMat kern(static_cast<int>(free_cols.size()), a.cols());
  for (size_t i = 0; i < free_cols.size(); ++i)
    for (int r = 0; r < a.cols(); ++r)
      kern.at(static_cast<int>(i), r) = snf.v.at(r, free_cols[i]);
  for (int i = 0; i < kern.rows(); ++i)
    check(a * kern.row(i) == IntVec(a.rows()), "kernel rows annihilated");
  return kern;
}

}  // namespace cycov
