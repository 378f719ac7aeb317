#pragma once

#include <json.hpp>

#include "cycov/covers.hpp"
#include "cycov/kummer.hpp"

namespace cycov {

// Reports use insertion-ordered JSON so identical inputs always produce
// byte-identical output.
using Json = nlohmann::ordered_json;

// Integers become JSON numbers while they are exactly representable in a
// double (|x| < 2^53); larger values become decimal strings.
Json json_of(const Int& x);
// Rationals are always strings: "p/q", or "p" when integral.
Json json_of(const Rat& x);
Json json_of(const IntVec& v);
Json json_of(const IntMat& m);
Json json_of(const Fan& f);
Json json_of(const QDivisor& d);
Json json_of(const CycloNum& c);
Json json_of(const CycloPoly& p);
Json json_of(const ClassGroup& g);
Json json_of(const RootData& r);
Json json_of(const std::vector<DecompRow>& rows);
Json json_of(const Codim1Model& m);
Json json_of(const KummerDecomp& k);
Json json_of(const IndexOneCover& c);
Json json_of(const SemistableReport& r);

// Fan file: {"rank": r, "rays": [[...]], "cones": [[...]]}.
// Throws MalformedInput on structural problems.
Fan fan_from_json(const Json& j);

// Divisor file: {"coefficients": ["p/q", ...]} (numbers also accepted).
std::vector<Rat> divisor_coeffs_from_json(const Json& j);

}  // namespace cycov
