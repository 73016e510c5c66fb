#pragma once

// HOMFLY polynomial from resolution output, an independent HOMFLY oracle on
// closed braids, the Jones specialization and the Morton-Franks-Williams
// lower bound on braid index.
//
// Convention: l P(L+) + l^-1 P(L-) + m P(L0) = 0, P(unknot) = 1, so the
// split union with an unknot multiplies by delta = -(l + l^-1) m^-1.

#include <map>
#include <string>
#include <variant>

#include "json.hpp"

#include "braidskein/braid.hpp"
#include "braidskein/poly.hpp"
#include "braidskein/skein.hpp"

namespace braidskein {

struct AnyExponents {
  static void check(const Exponents&) {}
};

/// Exponents.first is the power of l, Exponents.second the power of m.
using HomflyPoly = SparsePoly2<AnyExponents>;

/// "-l^-4 - 2l^-2 + l^-2 m^2": terms graded by m, then l.
std::string format_homfly(const HomflyPoly& h);
HomflyPoly parse_homfly(std::string_view text);
nlohmann::json homfly_to_json(const HomflyPoly& h);

HomflyPoly homfly_delta();

/// Images of A, B and the unlink factor used by to_homfly.
struct BridgeWeights {
  HomflyPoly a_image;
  HomflyPoly b_image;
  HomflyPoly delta;

  /// A -> -l^-2, B -> -l^-1 m, delta = -(l + l^-1) m^-1.
  static BridgeWeights standard();
};

/// Substitutes A and B in every coefficient and weights the lambda entry by
/// delta^(parts(lambda) - 1).
HomflyPoly to_homfly(const SkeinVector& v, const BridgeWeights& weights = BridgeWeights::standard());

/// HOMFLY of the closed braid by its own skein recursion (no shared code
/// with the resolution engine).
HomflyPoly homfly_oracle(const BraidWord& w);

/// ceil(l-breadth / 2) + 1. Throws std::invalid_argument on zero.
int mfw_lower_bound(const HomflyPoly& h);

enum class BraidIndexCertificate { Certified, Unknown };
/// Certified when the MFW bound of a 3-braid closure reaches 3. Throws
/// std::invalid_argument unless w has three strands.
BraidIndexCertificate certify_braid_index_3(const BraidWord& w);

/// Laurent polynomial in t^(1/2): key is twice the t exponent.
using JonesPoly = std::map<int, Integer>;

/// l = i t^-1, m = i (t^-1/2 - t^1/2). Throws std::domain_error if the
/// result is not a Laurent polynomial in t^(1/2) with integer coefficients.
JonesPoly jones(const HomflyPoly& h);
/// "t + t^3 - t^4", half powers as "t^(1/2)".
std::string format_jones(const JonesPoly& j);

}  // namespace braidskein
