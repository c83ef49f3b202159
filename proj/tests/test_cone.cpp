#include <doctest.h>

#include "tancone/cone.hpp"
#include "tancone/examples.hpp"

using namespace tancone;

namespace {

// Deterministic rational parameter samples, distinct per seed.
Rat sample(int seed) {
    static const Rat pool[] = {Rat(1),     Rat(-1),    Rat(2), Rat(1, 2), Rat(-2),
                               Rat(-1, 2), Rat(3),     Rat(1, 3), Rat(-3), Rat(5, 7)};
    return pool[seed % 10];
}

std::map<VarId, Rat> sample_params(const SolutionBranch& b, int seed) {
    std::map<VarId, Rat> vals;
    int i = seed;
    for (VarId p : b.params) vals[p] = sample(i++);
    return vals;
}

// Substitute a sampled branch point into the exact constraint expansion and
// demand every component vanish identically. This is the strongest possible
// check: branch points satisfy H^{(i)} for all i up to the branch order.
void check_branch_exact(const Linkage& l, const SolutionBranch& b, int seed) {
    auto vals = sample_params(b, seed);
    JetAssignment jets(l.n);
    for (int j = 0; j < l.n; ++j) {
        jets[j].resize(b.order);
        for (int k = 1; k <= b.order; ++k)
            jets[j][k - 1] = MultiPoly::constant(b.x[k - 1][j].evaluate(vals));
    }
    auto per_cycle = expand_loop_constraints(l, jets, b.order);
    for (const auto& orders : per_cycle)
        for (const auto& comp : orders)
            for (const MultiPoly& p : comp) CHECK(p.is_zero());
}

} // namespace

TEST_CASE("two-joint linkage: one regular branch x_1 = (s, s)") {
    Linkage l = parse_linkage(examples::twojoint());
    ConeAnalysis a = tangent_cone(l, 3);
    CHECK(a.cone.kappa == 1);
    CHECK(a.cone.status == ConeStatus::Terminated);
    REQUIRE(a.cone.terminal.branches.size() == 1);
    const SolutionBranch& b = a.cone.terminal.branches[0];
    CHECK(b.dim() == 1);
    REQUIRE(b.params.size() == 1);
    MultiPoly s = MultiPoly::var(b.params[0]);
    CHECK(b.x[0][0] == s);
    CHECK(b.x[0][1] == s);
}

TEST_CASE("four-bar at a regular point: kappa 1, one dim-1 branch") {
    Linkage l = parse_linkage(examples::fourbar());
    ConeAnalysis a = tangent_cone(l, 3);
    CHECK(a.cone.kappa == 1);
    CHECK(a.cone.status == ConeStatus::Terminated);
    REQUIRE(a.cone.terminal.branches.size() == 1);
    CHECK(a.cone.terminal.branches[0].dim() == 1);
    for (int seed = 0; seed < 5; ++seed) check_branch_exact(l, a.cone.terminal.branches[0], seed);
}

TEST_CASE("six-bar: kappa 2 with a dim-2 and a dim-1 branch") {
    Linkage l = parse_linkage(examples::sixbar());
    ConeAnalysis a = tangent_cone(l, 4);
    CHECK(a.cone.kappa == 2);
    CHECK(a.cone.status == ConeStatus::Terminated);
    REQUIRE(a.cone.terminal.branches.size() == 2);
    CHECK(a.cone.terminal.branches[0].dim() == 2);
    CHECK(a.cone.terminal.branches[1].dim() == 1);
    // Stage 1 is strictly bigger than the cone: the singular point has a
    // 3-dimensional velocity space.
    CHECK(a.stages[0].branches[0].dim() == 3);
    CHECK_FALSE(cone_equal(a.stages[0], a.stages[1]));
    CHECK(cone_equal(a.stages[1], a.stages[2]));
    for (const SolutionBranch& b : a.cone.terminal.branches)
        for (int seed = 0; seed < 5; ++seed) check_branch_exact(l, b, seed);
}

TEST_CASE("seven-R: kappa 2 with two dim-1 branches, refined at order 4") {
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 6);
    CHECK(a.cone.kappa == 2);
    CHECK(a.cone.status == ConeStatus::Terminated);
    for (const ConeStage& st : a.stages) CHECK_FALSE(st.inconclusive());
    const ConeStage& deepest = a.stages.back();
    REQUIRE(deepest.branches.size() == 2);
    for (const SolutionBranch& b : deepest.branches) {
        CHECK(b.dim() == 1);
        for (int seed = 0; seed < 4; ++seed) check_branch_exact(l, b, seed);
    }
    // Both branches share the same velocity space but differ in acceleration.
    RationalMatrix b0 = pi1_basis(deepest.branches[0]);
    RationalMatrix b1 = pi1_basis(deepest.branches[1]);
    CHECK(subspace_contains(b0, b1));
    CHECK(subspace_contains(b1, b0));
    CHECK_FALSE(project(deepest.branches[0], 2) == project(deepest.branches[1], 2));
}

TEST_CASE("branch parameterizations are weighted homogeneous (cone property)") {
    // x_k must be weighted homogeneous of degree k in the parameters, which
    // is exactly the statement that the solution set is a cone under the
    // scaling x_k -> lambda^k x_k.
    for (const std::string& doc : {examples::sixbar(), examples::sevenR()}) {
        Linkage l = parse_linkage(doc);
        ConeAnalysis a = tangent_cone(l, 4);
        for (const SolutionBranch& b : a.stages.back().branches)
            for (int k = 1; k <= b.order; ++k)
                for (const MultiPoly& comp : b.x[k - 1])
                    CHECK(comp.weighted_homogeneous(k));
    }
}

TEST_CASE("stage branches nest: order i+1 points project into order i") {
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 4);
    for (std::size_t s = 1; s < a.stages.size(); ++s) {
        for (const SolutionBranch& hi : a.stages[s].branches) {
            RationalMatrix hi_pi1 = pi1_basis(hi);
            bool contained = false;
            for (const SolutionBranch& lo : a.stages[s - 1].branches)
                if (subspace_contains(pi1_basis(lo), hi_pi1)) contained = true;
            CHECK(contained);
        }
    }
}

TEST_CASE("project validates the order index") {
    Linkage l = parse_linkage(examples::twojoint());
    ConeAnalysis a = tangent_cone(l, 2);
    const SolutionBranch& b = a.stages.back().branches[0];
    CHECK_THROWS_AS(project(b, 0), std::out_of_range);
    CHECK_THROWS_AS(project(b, b.order + 1), std::out_of_range);
}

TEST_CASE("order cap is reported when the cone cannot stabilize in time") {
    Linkage l = parse_linkage(examples::sixbar());
    ConeAnalysis a = tangent_cone(l, 1);
    CHECK(a.cone.kappa == -1);
    CHECK(a.cone.status == ConeStatus::OrderCapped);
    CHECK(status_name(a.cone.status) == "order-capped");
}

TEST_CASE("default_max_order honors the environment override") {
    CHECK(default_max_order() == 6);
}
