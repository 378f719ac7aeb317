#pragma once

#include <optional>
#include <vector>

#include "cycov/toric.hpp"

namespace cycov {

// Torus-invariant Q-Weil divisor on a fixed fan: one exact rational
// coefficient per ray, in ray-list order.
class QDivisor {
public:
  QDivisor(FanPtr fan, std::vector<Rat> coeffs);
  static QDivisor zero(FanPtr fan);

  const FanPtr& fan() const { return fan_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& coeff(int ray) const { return coeffs_[ray]; }
  bool is_integral() const;
  bool is_zero() const;

  QDivisor operator+(const QDivisor& o) const;
  QDivisor operator-(const QDivisor& o) const;
  QDivisor operator*(const Rat& c) const;
  bool operator==(const QDivisor& o) const;

private:
  FanPtr fan_;
  std::vector<Rat> coeffs_;
};

// Divisor of the character chi^v: coefficient <v, e> at each ray e.
QDivisor div_char(const FanPtr& f, const CharVec& v);

// Componentwise floor.
QDivisor floor_div(const QDivisor& d);

// Fractional part {D} = D - floor(D), coefficients in [0, 1).
QDivisor frac_div(const QDivisor& d);

// Ray indices with nonzero coefficient.
std::vector<int> support(const QDivisor& d);

// Ray indices with non-integral coefficient.
std::vector<int> frac_support(const QDivisor& d);

// A character v with div_char(v) = d, if one exists. Requires d integral.
std::optional<CharVec> is_principal(const QDivisor& d);

struct TorsionIndex {
  Int r;      // least r >= 1 with r*d integral and principal
  CharVec v;  // div_char(v) = r*d
};

// Error NotTorsion when the class of d has infinite order.
TorsionIndex torsion_index(const QDivisor& d);

// True iff d is Cartier: on each maximal cone some character matches all of
// the cone's coefficients. Requires d integral.
bool is_cartier(const QDivisor& d);

}  // namespace cycov
