#pragma once

#include <utility>
#include <vector>

#include "cycov/roots.hpp"

namespace cycov {

// The index-one cover of a torsion Q-divisor: the normalized r-th root of
// the character realizing div = r*D, with r the torsion index.
struct IndexOneCover {
  Int r;
  CharVec v;      // div_char(v) = r*D
  RootData root;  // irreducible: root.d = 1, root.n_prime = r
};

IndexOneCover index_one_cover(const FanPtr& f, const QDivisor& d);

// Local analysis of the n-th root of a monomial z_1^{m_1} ... z_d^{m_d}
// on affine d-space.
struct SemistableReport {
  Int n;
  std::vector<Int> m;
  Int g;                // gcd(n, m_1, ..., m_d)
  Int n_prime;          // n / g
  Int component_count;  // = g
  IntMat lattice_basis;  // basis of {lambda : sum lambda_i m_i in nZ}
  bool is_normal;        // max m_i = 1
  bool is_smooth;        // d = 1 and m_1 = 1
  std::vector<int> singular_codim1;                 // indices with m_i >= 2
  std::vector<std::pair<int, int>> singular_codim2; // pairs with m_i=m_j=1
};

SemistableReport semistable_analyze(const std::vector<Int>& m, const Int& n);

}  // namespace cycov
