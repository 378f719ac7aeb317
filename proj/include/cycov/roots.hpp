#pragma once

#include <utility>
#include <vector>

#include "cycov/qdiv.hpp"

namespace cycov {

// Full output of the normalized n-th root of the character chi^v on the
// toric variety of the fan.
struct RootData {
  Int n;
  CharVec v;
  Int n_prime;  // order of v/n in M_Q / M
  Int d;        // number of irreducible components, d * n_prime = n
  IntMat sublattice_basis;  // rows: basis of N' in N-coordinates, |det| = n'
  FanPtr component_fan;     // the fan rewritten in N'-coordinates
  std::vector<Int> ramification;    // per ray of the base fan
  QDivisor pullback;                // pi^* D on the component fan, integral
  std::vector<QDivisor> eigensheaves;  // floor(i*D), i = 0..n-1, on the base
  bool flat;      // all eigensheaves Cartier
  bool toroidal;  // base fan quasi-smooth
  CharVec psi_exponent;  // v/n written in M'-coordinates
};

// (n', d): n' = min{i > 0 : i*v/n in M}, d = n/n'.
std::pair<Int, Int> char_root_order(int m_rank, const CharVec& v, const Int& n);

// Basis of N' = {e in N : <v,e> in nZ}, canonical via HNF.
IntMat root_sublattice(const FanPtr& f, const CharVec& v, const Int& n);

RootData normalized_char_root(const FanPtr& f, const CharVec& v, const Int& n);

// n / gcd(n, ord), with gcd(n, 0) = n.
Int ramification_index(const Int& ord, const Int& n);

// pi^* D on the component fan: coefficient ord_E / gcd(n, ord_E) per ray.
QDivisor pullback_divisor(const FanPtr& f, const CharVec& v, const Int& n);

// epsilon(d, i) of the derivation eigenspace decomposition: 1 iff d is not an
// integer and i*d + 1/r(d) is not an integer, else 0.
int epsilon(const Rat& d_coeff, const Int& i);

enum class DecompMode { FormsLog, Forms, Derivations, DerivationsLog };

// One eigenspace line of the differential/derivation decomposition.
struct DecompRow {
  Int i;
  DecompMode mode;
  QDivisor twist;                // floor(i*D)
  std::vector<int> log_support;  // ray indices
};

// Requires sigma to contain frac_support(D) and n*D to be principal.
std::vector<DecompRow> differential_decomposition(const QDivisor& d,
                                                  const std::vector<int>& sigma,
                                                  const Int& n,
                                                  DecompMode mode);

// Codimension-one local model of the root of u*f^m: the algebra
// O_X[T1,T2] / (T1^g - u, T2^n' - f*T1^j).
struct Codim1Model {
  Int n, m;
  Int g;        // gcd(n, m), with gcd(n, 0) = n
  Int n_prime;  // n = g * n'
  Int j;        // in [1, n'], j*m == g (mod n)
  Int m_prime;  // m = g * m'
};

Codim1Model codim1_model(const Int& n, const Int& m);

// Unique (alpha, beta, gamma) with 0 <= alpha < n', 0 <= beta < g,
// i = alpha*j + n'*beta + n*gamma, satisfying the ledger identity
// m*gamma + floor(j*m/n)*alpha + m'*beta = floor(i*m/n).
struct Codim1Coords {
  Int alpha, beta, gamma;
};

Codim1Coords codim1_decompose(const Codim1Model& model, const Int& i);

const char* to_string(DecompMode m);

}  // namespace cycov
