#include "cycov/qdiv.hpp"

namespace cycov {

QDivisor::QDivisor(FanPtr fan, std::vector<Rat> coeffs)
    : fan_(std::move(fan)), coeffs_(std::move(coeffs)) {
  check(fan_ != nullptr, "divisor needs a validated fan");
  if (coeffs_.size() != fan_->rays.size())
    fail("DimensionMismatch", "coefficient count does not match ray count");
}

QDivisor QDivisor::zero(FanPtr fan) {
  check(fan != nullptr, "divisor needs a validated fan");
  size_t n = fan->rays.size();
  return QDivisor(std::move(fan), std::vector<Rat>(n));
}

bool QDivisor::is_integral() const {
  for (const Rat& c : coeffs_)
    if (!c.is_integral()) return false;
  return true;
}

bool QDivisor::is_zero() const {
  for (const Rat& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

QDivisor QDivisor::operator+(const QDivisor& o) const {
  check(fan_ == o.fan_, "divisor arithmetic on the same fan");
  std::vector<Rat> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return QDivisor(fan_, std::move(c));
}

QDivisor QDivisor::operator-(const QDivisor& o) const {
  check(fan_ == o.fan_, "divisor arithmetic on the same fan");
  std::vector<Rat> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return QDivisor(fan_, std::move(c));
}

QDivisor QDivisor::operator*(const Rat& s) const {
  std::vector<Rat> c(coeffs_);
  for (Rat& x : c) x *= s;
  return QDivisor(fan_, std::move(c));
}

bool QDivisor::operator==(const QDivisor& o) const {
  return fan_ == o.fan_ && coeffs_ == o.coeffs_;
}

QDivisor div_char(const FanPtr& f, const CharVec& v) {
  check(f != nullptr, "validated fan present");
  if (v.size() != static_cast<size_t>(f->rank))
    fail("DimensionMismatch", "character length does not match fan rank");
  std::vector<Rat> c;
  c.reserve(f->rays.size());
  for (const IntVec& e : f->rays) c.emplace_back(pairing(v, e));
  return QDivisor(f, std::move(c));
}

QDivisor floor_div(const QDivisor& d) {
  std::vector<Rat> c;
  c.reserve(d.coeffs().size());
  for (const Rat& x : d.coeffs()) c.emplace_back(x.floor());
  return QDivisor(d.fan(), std::move(c));
}

QDivisor frac_div(const QDivisor& d) { return d - floor_div(d); }

std::vector<int> support(const QDivisor& d) {
  std::vector<int> s;
  for (size_t i = 0; i < d.coeffs().size(); ++i)
    if (!d.coeffs()[i].is_zero()) s.push_back(static_cast<int>(i));
  return s;
}

std::vector<int> frac_support(const QDivisor& d) {
  std::vector<int> s;
  for (size_t i = 0; i < d.coeffs().size(); ++i)
    if (!d.coeffs()[i].is_integral()) s.push_back(static_cast<int>(i));
  return s;
}

std::optional<CharVec> is_principal(const QDivisor& d) {
  if (!d.is_integral())
    fail("NotIntegral", "principality is defined for integral divisors");
  const Fan& f = *d.fan();
  IntMat a(static_cast<int>(f.rays.size()), f.rank);
  IntVec b(f.rays.size());
  for (size_t i = 0; i < f.rays.size(); ++i) {
    for (int j = 0; j < f.rank; ++j)
      a.at(static_cast<int>(i), j) = f.rays[i][j];
    b[i] = d.coeffs()[i].num();
  }
  return solve_integer(a, b);
}

TorsionIndex torsion_index(const QDivisor& d) {
  ClassGroup cg = class_group(d.fan());  // RaysDontSpan propagates
  Int q = 1;
  for (const Rat& c : d.coeffs()) q = lcm(q, c.den());
  Int bound = q * cg.torsion_exponent();
  for (Int r = 1; r <= bound; ++r) {
    QDivisor rd = d * Rat(r);
    if (!rd.is_integral()) continue;
    if (auto v = is_principal(rd)) return {r, *v};
  }
  fail("NotTorsion", "no multiple of the divisor is principal; its class has "
                     "infinite order");
}

bool is_cartier(const QDivisor& d) {
  if (!d.is_integral())
    fail("NotIntegral", "Cartier test is defined for integral divisors");
  const Fan& f = *d.fan();
  for (const auto& cone : f.cones) {
    IntMat a(static_cast<int>(cone.size()), f.rank);
    IntVec b(cone.size());
    for (size_t i = 0; i < cone.size(); ++i) {
      for (int j = 0; j < f.rank; ++j)
        a.at(static_cast<int>(i), j) = f.rays[cone[i]][j];
      b[i] = d.coeffs()[cone[i]].num();
    }
    if (!solve_integer(a, b)) return false;
  }
  return true;
}

}  // namespace cycov
