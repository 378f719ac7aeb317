#include "cycov/toric.hpp"

#include <set>
#include <sstream>

namespace cycov {

namespace {

std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

IntMat rays_matrix(const Fan& f, const std::vector<int>& indices) {
  IntMat m(static_cast<int>(indices.size()), f.rank);
  for (size_t i = 0; i < indices.size(); ++i)
    for (int j = 0; j < f.rank; ++j)
      m.at(static_cast<int>(i), j) = f.rays[indices[i]][j];
  return m;
}

std::vector<int> all_ray_indices(const Fan& f) {
  std::vector<int> idx(f.rays.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return idx;
}

}  // namespace

Int pairing(const CharVec& v, const IntVec& e) {
  check(v.size() == e.size(), "pairing of vectors of equal length");
  Int s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += v[i] * e[i];
  return s;
}

FanPtr validate_fan(Fan f) {
  if (f.rank < 1) fail("EmptyFan", "fan rank must be positive");
  if (f.rays.empty()) fail("EmptyFan", "fan has no rays");
  for (size_t i = 0; i < f.rays.size(); ++i) {
    if (f.rays[i].size() != static_cast<size_t>(f.rank))
      fail("DimensionMismatch",
           "ray " + std::to_string(i) + " has wrong length");
    bool zero = true;
    for (const Int& e : f.rays[i])
      if (e != 0) { zero = false; break; }
    if (zero)
      fail("NotPrimitive", "ray " + std::to_string(i) + " is zero");
    if (primitivize(f.rays[i]).content != 1)
      fail("NotPrimitive",
           "ray " + std::to_string(i) + " = " + vec_str(f.rays[i]) +
               " is not primitive");
    for (size_t k = 0; k < i; ++k)
      if (f.rays[k] == f.rays[i])
        fail("DuplicateRay", "rays " + std::to_string(k) + " and " +
                                 std::to_string(i) + " coincide");
  }
  std::vector<bool> used(f.rays.size(), false);
  for (size_t c = 0; c < f.cones.size(); ++c) {
    if (f.cones[c].empty())
      fail("MalformedCone", "cone " + std::to_string(c) + " is empty");
    std::set<int> seen;
    for (int idx : f.cones[c]) {
      if (idx < 0 || idx >= static_cast<int>(f.rays.size()))
        fail("MalformedCone", "cone " + std::to_string(c) +
                                  " references ray index " +
                                  std::to_string(idx));
      if (!seen.insert(idx).second)
        fail("MalformedCone", "cone " + std::to_string(c) +
                                  " repeats ray index " + std::to_string(idx));
      used[idx] = true;
    }
  }
  for (size_t i = 0; i < f.rays.size(); ++i)
    if (!used[i])
      fail("UnusedRay", "ray " + std::to_string(i) + " is in no cone");
  return std::make_shared<const Fan>(std::move(f));
}

ClassGroup class_group(const FanPtr& f) {
  check(f != nullptr, "validated fan present");
  IntMat a = rays_matrix(*f, all_ray_indices(*f));
  if (rank(a) < f->rank)
    fail("RaysDontSpan", "rays do not span N x Q; class group would acquire "
                         "an extra free part");
  SnfResult snf = smith_normal_form(a);
  ClassGroup cg{Int(static_cast<long>(f->rays.size()) - f->rank),
                {},
                a,
                snf};
  const int k = std::min(a.rows(), a.cols());
  for (int i = 0; i < k; ++i)
    if (snf.s.at(i, i) > 1) cg.torsion.push_back(snf.s.at(i, i));
  return cg;
}

bool is_quasi_smooth(const FanPtr& f) {
  check(f != nullptr, "validated fan present");
  for (const auto& cone : f->cones) {
    IntMat m = rays_matrix(*f, cone);
    if (rank(m) != static_cast<int>(cone.size())) return false;
  }
  return true;
}

bool is_smooth(const FanPtr& f) {
  check(f != nullptr, "validated fan present");
  for (const auto& cone : f->cones) {
    IntMat m = rays_matrix(*f, cone);
    if (rank(m) != static_cast<int>(cone.size())) return false;
    SnfResult snf = smith_normal_form(m);
    for (int i = 0; i < static_cast<int>(cone.size()); ++i)
      if (snf.s.at(i, i) != 1) return false;
  }
  return true;
}

FormMembership log_form_membership(const CharVec& m,
                                   const std::vector<CharVec>& directions,
                                   const IntVec& e) {
  if (primitivize(e).content != 1)
    fail("NotPrimitive", "divisor direction e must be primitive");
  if (m.size() != e.size())
    fail("DimensionMismatch", "character length does not match lattice rank");
  if (!directions.empty()) {
    IntMat d = IntMat::from_rows(directions);
    if (d.cols() != static_cast<int>(e.size()))
      fail("DimensionMismatch", "direction length does not match rank");
    if (rank(d) != static_cast<int>(directions.size()))
      fail("DependentDirections",
           "wedge of dependent directions is zero; not a decomposable form");
  }
  Int me = pairing(m, e);
  if (me < 0) return FormMembership::Worse;
  if (me > 0) return FormMembership::Regular;
  for (const CharVec& mi : directions)
    if (pairing(mi, e) != 0) return FormMembership::LogPole;
  return FormMembership::Regular;
}

DerivationMembership log_derivation_membership(const CharVec& m,
                                               const IntVec& e0,
                                               const IntVec& e) {
  if (primitivize(e).content != 1)
    fail("NotPrimitive", "divisor direction e must be primitive");
  bool zero = true;
  for (const Int& c : e0)
    if (c != 0) { zero = false; break; }
  if (zero) fail("ZeroVector", "derivation direction e0 is zero");
  if (m.size() != e.size() || e0.size() != e.size())
    fail("DimensionMismatch", "vector lengths do not match lattice rank");
  Int me = pairing(m, e);
  if (me >= 0) return DerivationMembership::LogRegular;
  if (me == -1) {
    IntVec p = primitivize(e0).p;
    IntVec q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[i] = -p[i];
    if (p == e || q == e) return DerivationMembership::Regular;
  }
  return DerivationMembership::Worse;
}

const char* to_string(FormMembership m) {
  switch (m) {
    case FormMembership::Regular: return "Regular";
    case FormMembership::LogPole: return "LogPole";
    case FormMembership::Worse: return "Worse";
  }
  return "?";
}

const char* to_string(DerivationMembership m) {
  switch (m) {
    case DerivationMembership::LogRegular: return "LogRegular";
    case DerivationMembership::Regular: return "Regular";
    case DerivationMembership::Worse: return "Worse";
  }
  return "?";
}

}  // namespace cycov
