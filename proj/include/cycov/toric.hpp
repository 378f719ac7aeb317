#pragma once

#include <memory>
#include <vector>

#include "cycov/exact.hpp"

namespace cycov {

// Element of the character lattice M (dual to N).
using CharVec = IntVec;

// Fan in a lattice N of the given rank: primitive ray generators plus
// maximal cones as ray-index sets. Faces are implicit.
struct Fan {
  int rank = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> cones;
};

// A validated fan; produced only by validate_fan.
using FanPtr = std::shared_ptr<const Fan>;

// Checks all Fan invariants and freezes the fan.
// Errors: EmptyFan, DimensionMismatch, NotPrimitive, DuplicateRay,
// MalformedCone, UnusedRay.
FanPtr validate_fan(Fan f);

Int pairing(const CharVec& v, const IntVec& e);

// Structure of Cl(X) = coker(M -> Z^#rays).
struct ClassGroup {
  Int free_rank;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility chain
  IntMat presentation;       // the pairing matrix rays x rank
  SnfResult snf;             // snf of the presentation
  // largest invariant factor, 1 if torsion-free
  Int torsion_exponent() const {
    return torsion.empty() ? Int(1) : torsion.back();
  }
};

// Requires the rays to span N x Q; error RaysDontSpan otherwise.
ClassGroup class_group(const FanPtr& f);

// True iff every cone is simplicial.
bool is_quasi_smooth(const FanPtr& f);

// True iff every cone's rays extend to a basis of N.
bool is_smooth(const FanPtr& f);

enum class FormMembership { Regular, LogPole, Worse };

// Classifies the decomposable p-form chi^m * a_{m_1} ^ ... ^ a_{m_p} at the
// invariant prime divisor V(e). Directions must be linearly independent
// (error DependentDirections); e must be primitive.
FormMembership log_form_membership(const CharVec& m,
                                   const std::vector<CharVec>& directions,
                                   const IntVec& e);

enum class DerivationMembership { LogRegular, Regular, Worse };

// Classifies the derivation chi^m * theta_{e0} at V(e). LogRegular means
// regular with at most logarithmic behavior; Regular means regular but not
// logarithmic (only possible when <m,e> = -1 and e0 is parallel to e).
DerivationMembership log_derivation_membership(const CharVec& m,
                                               const IntVec& e0,
                                               const IntVec& e);

const char* to_string(FormMembership m);
const char* to_string(DerivationMembership m);

}  // namespace cycov
