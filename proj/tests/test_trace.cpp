#include <doctest.h>

#include <cmath>

#include "tancone/classify.hpp"
#include "tancone/examples.hpp"
#include "tancone/trace.hpp"

using namespace tancone;

namespace {

std::map<VarId, double> unit_params(const SolutionBranch& b, double value = 1.0) {
    std::map<VarId, double> m;
    for (VarId p : b.params) m[p] = value;
    return m;
}

} // namespace

TEST_CASE("zero steps returns the single exact reference point") {
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 4);
    TracedCurve c = trace_branch(l, a.stages.back().branches[0], unit_params(a.stages.back().branches[0]), 0, 0.01);
    REQUIRE(c.points.size() == 1);
    CHECK(c.points[0].t == 0.0);
    CHECK(c.points[0].residual == 0.0);
    for (double d : c.points[0].delta) CHECK(d == 0.0);
}

TEST_CASE("traced curves stay on the closure variety") {
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 4);
    for (const SolutionBranch& b : a.stages.back().branches) {
        TracedCurve c = trace_branch(l, b, unit_params(b), 8, 0.02);
        CHECK(c.points.size() == 17);
        for (const TracePoint& p : c.points) {
            CHECK(p.residual < kAcceptTol);
            CHECK(closure_residual_vector(l, p.delta).norm() < kAcceptTol);
        }
        // t is monotone and symmetric around the center point
        for (std::size_t i = 1; i < c.points.size(); ++i) CHECK(c.points[i].t > c.points[i - 1].t);
        CHECK(c.points[8].t == 0.0);
    }
}

TEST_CASE("fit_jets recovers the derivatives of a synthetic polynomial curve") {
    // Build a fake traced curve delta_j(t) = a_j t + b_j t^2/2 and check the
    // fitted first and second derivatives.
    TracedCurve c;
    c.h = 0.05;
    const double a0 = 0.7, b0 = -1.3, a1 = -0.2, b1 = 0.4;
    for (int i = -6; i <= 6; ++i) {
        TracePoint p;
        p.t = i * c.h;
        p.delta = {a0 * p.t + b0 * p.t * p.t / 2, a1 * p.t + b1 * p.t * p.t / 2};
        p.q = p.delta;
        c.points.push_back(p);
    }
    auto jets = fit_jets(c, 2);
    REQUIRE(jets.size() == 2);
    CHECK(jets[0][0] == doctest::Approx(a0).epsilon(1e-10));
    CHECK(jets[0][1] == doctest::Approx(a1).epsilon(1e-10));
    CHECK(jets[1][0] == doctest::Approx(b0).epsilon(1e-10));
    CHECK(jets[1][1] == doctest::Approx(b1).epsilon(1e-10));
}

TEST_CASE("fit_jets requires enough points for the fit degree") {
    TracedCurve c;
    c.h = 0.01;
    for (int i = -1; i <= 1; ++i) {
        TracePoint p;
        p.t = i * c.h;
        p.delta = {0.0};
        c.points.push_back(p);
    }
    CHECK_THROWS_AS(fit_jets(c, 2), std::invalid_argument);
}

TEST_CASE("numerically traced seven-R branches match their exact jets") {
    // The decisive cross-check between the exact analysis and the numeric
    // tracer: fit derivatives out of the traced curve and compare them with
    // the branch's polynomial jets at the same parameter values.
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 4);
    const auto& branches = a.stages.back().branches;
    REQUIRE(branches.size() == 2);
    for (const SolutionBranch& b : branches) {
        auto params = unit_params(b);
        std::map<VarId, double> pd(params.begin(), params.end());
        TracedCurve c = trace_branch(l, b, params, 10, 0.015);
        auto jets = fit_jets(c, 2);
        for (int j = 0; j < l.n; ++j) {
            double x1 = b.x[0][j].evaluate(pd);
            double x2 = b.x[1][j].evaluate(pd);
            CHECK(jets[0][j] == doctest::Approx(x1).epsilon(5e-4));
            // second derivatives are fitted less accurately
            CHECK(std::abs(jets[1][j] - x2) < 5e-2 * std::max(1.0, std::abs(x2)));
        }
    }
}

TEST_CASE("the two seven-R branches bend apart at second order") {
    // Same velocity, different acceleration: the numeric signature of a
    // non-transversal bifurcation.
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 4);
    const auto& branches = a.stages.back().branches;
    std::map<VarId, double> p0 = unit_params(branches[0]);
    std::map<VarId, double> p1 = unit_params(branches[1]);
    TracedCurve c0 = trace_branch(l, branches[0], p0, 10, 0.015);
    TracedCurve c1 = trace_branch(l, branches[1], p1, 10, 0.015);
    auto j0 = fit_jets(c0, 2);
    auto j1 = fit_jets(c1, 2);
    double v_dist = 0, a_dist = 0;
    for (int j = 0; j < l.n; ++j) {
        v_dist = std::max(v_dist, std::abs(j0[0][j] - j1[0][j]));
        a_dist = std::max(a_dist, std::abs(j0[1][j] - j1[1][j]));
    }
    CHECK(v_dist < 1e-3);
    CHECK(a_dist > 0.1);
}

TEST_CASE("halving h reduces the predictor-corrector drift") {
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 4);
    const SolutionBranch& b = a.stages.back().branches[1];
    auto params = unit_params(b);
    // Compare the fitted velocity error at two step sizes.
    std::map<VarId, double> pd(params.begin(), params.end());
    auto vel_err = [&](double h, int steps) {
        TracedCurve c = trace_branch(l, b, params, steps, h);
        auto jets = fit_jets(c, 2);
        double e = 0;
        for (int j = 0; j < l.n; ++j) e = std::max(e, std::abs(jets[0][j] - b.x[0][j].evaluate(pd)));
        return e;
    };
    double e1 = vel_err(0.04, 6);
    double e2 = vel_err(0.02, 6);
    CHECK(e2 < e1);
}

TEST_CASE("a vanishing first-order jet is rejected") {
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 4);
    const SolutionBranch& b = a.stages.back().branches[0];
    std::map<VarId, double> zero;
    for (VarId p : b.params) zero[p] = 0.0;
    CHECK_THROWS_AS(trace_branch(l, b, zero, 4, 0.01), std::invalid_argument);
}

TEST_CASE("an unreachable tolerance raises TraceFailure with the step index") {
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 4);
    const SolutionBranch& b = a.stages.back().branches[0];
    // A giant step size throws the predictor far off the variety; the
    // corrector cannot come back within tolerance.
    try {
        trace_branch(l, b, unit_params(b), 4, 50.0);
        FAIL_CHECK("expected TraceFailure");
    } catch (const TraceFailure& e) {
        CHECK(e.step != 0);
    }
}
