#include <doctest.h>

#include "tancone/factor.hpp"

using namespace tancone;

namespace {

const VarId S1 = param_var(1, 0);
const VarId S2 = param_var(1, 1);
const VarId Y1 = param_var(2, 0);

MultiPoly v(VarId id) { return MultiPoly::var(id); }
MultiPoly c(long n, long d = 1) { return MultiPoly::constant(Rat(n, d)); }

// Every alternative of a reduction must actually be a zero of p: pick the
// alternative's conditions at a sample point and check p vanishes there too.
bool alternative_consistent(const MultiPoly& p, const RealAlternative& alt) {
    // Only handles alternatives whose conditions pin single variables to 0,
    // which is all the cases exercised below.
    std::map<VarId, Rat> assign;
    for (const MultiPoly& cond : alt.conditions) {
        auto vars = cond.vars();
        if (vars.size() != 1) return true; // skip non-trivial conditions
        assign[*vars.begin()] = Rat(0);
    }
    for (VarId var : p.vars())
        if (!assign.count(var)) assign[var] = Rat(3);
    for (const MultiPoly& cond : alt.conditions)
        if (cond.evaluate(assign) != 0) return true;
    return p.evaluate(assign) == 0;
}

} // namespace

TEST_CASE("factor_restricted expands back to the input") {
    std::vector<MultiPoly> cases = {
        v(S1) * v(S1) - v(S2) * v(S2),
        (v(S1) + v(S2)) * (v(S1) + v(S2)),
        v(S1) * v(S1) * v(S2).scale(Rat(6, 5)),
        v(S1) * v(S1) + v(S2).scale(Rat(5, 3)),
        v(Y1) * v(S1) * v(S1) - v(Y1),
        c(7, 2),
    };
    for (const MultiPoly& p : cases) {
        Factorization f = factor_restricted(p);
        CHECK(f.expand() == p);
    }
}

TEST_CASE("monomial content is split off") {
    MultiPoly p = v(S1) * v(S1) * v(S2) + v(S1) * v(S2) * v(S2);
    Factorization f = factor_restricted(p);
    CHECK(f.expand() == p);
    // s1 * s2 * (s1 + s2): three factors, all of degree <= 1 content or the
    // linear cofactor.
    int total_deg = 0;
    for (auto& [fac, mult] : f.factors) total_deg += fac.degree() * mult;
    CHECK(total_deg == 3);
    CHECK(f.factors.size() == 3);
}

TEST_CASE("perfect powers are recognized") {
    MultiPoly s = v(S1).scale(Rat(2)) - v(S2);
    Factorization f = factor_restricted(s * s);
    CHECK(f.expand() == s * s);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].second == 2);
    CHECK_FALSE(f.scope_exceeded);
}

TEST_CASE("rational quadratic splits happen, irrational ones do not") {
    MultiPoly split = v(S1) * v(S1) - c(9, 4); // (s1-3/2)(s1+3/2)
    Factorization f = factor_restricted(split);
    CHECK(f.expand() == split);
    CHECK(f.factors.size() == 2);

    MultiPoly nosplit = v(S1) * v(S1) - c(2); // discriminant not a square
    Factorization g = factor_restricted(nosplit);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first.degree() == 2);
    CHECK_FALSE(g.scope_exceeded);

    // Difference of squares in two variables.
    MultiPoly ds = v(S1) * v(S1) - v(S2) * v(S2).scale(Rat(4));
    Factorization h = factor_restricted(ds);
    CHECK(h.expand() == ds);
    CHECK(h.factors.size() == 2);
    for (auto& [fac, mult] : h.factors) CHECK(fac.degree() == 1);
}

TEST_CASE("scope flag is set outside the declared scope") {
    // Degree 5 exceeds the degree-4 scope.
    MultiPoly p5 = v(S1) * v(S1) * v(S1) * v(S1) * v(S1) - v(S2);
    CHECK(factor_restricted(p5).scope_exceeded);
    // Four distinct parameters exceed the 3-variable scope.
    MultiPoly p4v = v(param_var(1, 0)) * v(param_var(1, 1)) +
                    v(param_var(1, 2)) * v(param_var(1, 3));
    CHECK(factor_restricted(p4v).scope_exceeded);
    // But monomial content still comes off before the scope check.
    MultiPoly stripped = v(S1) * p5;
    Factorization f = factor_restricted(stripped);
    CHECK(f.scope_exceeded);
    bool found_content = false;
    for (auto& [fac, mult] : f.factors)
        if (fac == v(S1)) found_content = true;
    CHECK(found_content);
}

TEST_CASE("real_zero_reduction: product gives one alternative per factor") {
    MultiPoly p = v(S1) * (v(S1) - v(S2));
    RealReduction r = real_zero_reduction(factor_restricted(p));
    CHECK_FALSE(r.inconclusive);
    REQUIRE(r.alternatives.size() == 2);
    for (const auto& alt : r.alternatives) {
        REQUIRE(alt.conditions.size() == 1);
        CHECK(alt.linear);
        CHECK(alternative_consistent(p, alt));
    }
}

TEST_CASE("real_zero_reduction: even multiplicity reduces to the radical") {
    MultiPoly s = v(S1) - v(S2);
    RealReduction r = real_zero_reduction(factor_restricted(s * s));
    REQUIRE(r.alternatives.size() == 1);
    REQUIRE(r.alternatives[0].conditions.size() == 1);
    CHECK(r.alternatives[0].conditions[0].degree() == 1);
}

TEST_CASE("real_zero_reduction: sum of squares vanishes componentwise") {
    // s1^2 + s2^2 = 0 over the reals iff s1 = 0 and s2 = 0.
    MultiPoly p = v(S1) * v(S1) + v(S2) * v(S2);
    RealReduction r = real_zero_reduction(factor_restricted(p));
    CHECK_FALSE(r.inconclusive);
    REQUIRE(r.alternatives.size() == 1);
    const auto& alt = r.alternatives[0];
    CHECK(alt.linear);
    REQUIRE(alt.conditions.size() == 2);
    std::map<VarId, Rat> zero{{S1, Rat(0)}, {S2, Rat(0)}};
    for (const MultiPoly& cond : alt.conditions) CHECK(cond.evaluate(zero) == 0);
}

TEST_CASE("real_zero_reduction: positive constant plus square has no real zero") {
    MultiPoly p = v(S1) * v(S1) + c(1);
    RealReduction r = real_zero_reduction(factor_restricted(p));
    CHECK_FALSE(r.inconclusive);
    CHECK(r.alternatives.empty());
}

TEST_CASE("real_zero_reduction propagates the scope flag") {
    MultiPoly p5 = v(S1) * v(S1) * v(S1) * v(S1) * v(S1) - v(S2);
    RealReduction r = real_zero_reduction(factor_restricted(p5));
    CHECK(r.inconclusive);
    // The unfactored polynomial still appears as a (non-linear) alternative.
    REQUIRE(r.alternatives.size() == 1);
    CHECK_FALSE(r.alternatives[0].linear);
}
