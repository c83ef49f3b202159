#pragma once

#include <vector>

#include "tancone/poly.hpp"

namespace tancone {

// Restricted factorization: monomial content, perfect powers, and
// quadratic-in-one-variable splits with exact square-root discriminants.
// Declared scope is total degree <= 4 in <= 3 non-jet parameters; outside
// of it the polynomial is returned unfactored with scope_exceeded set.
struct Factorization {
    Rat unit = Rat(1);
    std::vector<std::pair<MultiPoly, int>> factors; // (factor, multiplicity)
    bool scope_exceeded = false;

    MultiPoly expand() const;
};

Factorization factor_restricted(const MultiPoly& p);

// One way a condition polynomial can vanish over the reals: all polynomials
// in `conditions` are zero simultaneously. `linear` is false when a
// non-linear condition survived that could not be reduced further.
struct RealAlternative {
    std::vector<MultiPoly> conditions;
    bool linear = true;
};

// Real zero set of a factored polynomial, as a union of alternatives:
//  - each factor contributes its own alternatives (product zero <=> some
//    factor zero);
//  - even multiplicities reduce to the radical;
//  - a factor that is a positive combination of squares is replaced by the
//    simultaneous vanishing of the squared parts (linear after recursion
//    when those parts are linear).
struct RealReduction {
    std::vector<RealAlternative> alternatives;
    bool inconclusive = false; // scope flag from factoring propagates here
};

RealReduction real_zero_reduction(const Factorization& f);

} // namespace tancone
