#include <doctest.h>

#include <cmath>
#include <random>

#include "tancone/examples.hpp"
#include "tancone/hoc.hpp"

using namespace tancone;

namespace {

// Numeric loop velocity twist V(t) = sum_i sign_i qdot_i(t) Ad_{g_i(t)} Y_i
// along one cycle, for the curve q(t) given by numeric jets.
Eigen::Matrix<double, 6, 1> loop_velocity(const Linkage& l, int cycle,
                                          const std::vector<std::vector<double>>& jets, double t) {
    const FundamentalCycle& fc = l.cycles.at(cycle);
    auto q_of = [&](int coord) {
        double q = l.has_override() ? 0.0 : l.q0[coord].get_d();
        double fact = 1.0, tp = 1.0;
        for (std::size_t k = 0; k < jets[coord].size(); ++k) {
            fact *= static_cast<double>(k + 1);
            tp *= t;
            q += jets[coord][k] * tp / fact;
        }
        return q;
    };
    auto qdot_of = [&](int coord) {
        double v = 0, fact = 1.0, tp = 1.0;
        for (std::size_t k = 0; k < jets[coord].size(); ++k) {
            if (k > 0) {
                fact *= static_cast<double>(k);
                tp *= t;
            }
            v += jets[coord][k] * tp / fact;
        }
        return v;
    };
    PoseD g;
    Eigen::Matrix<double, 6, 1> v = Eigen::Matrix<double, 6, 1>::Zero();
    for (const CycleStep& s : fc.steps) {
        g = compose(g, exp_twist(l.coord_screw(s.coord), s.sign * q_of(s.coord)));
        TwistD inst = adjoint_apply(g, to_double(l.coord_screw(s.coord)));
        v += s.sign * qdot_of(s.coord) * inst.vec();
    }
    return v;
}

// (i-1)-th central finite difference of the loop velocity at t=0: a numeric
// oracle for H^{(i)} evaluated on the same jets.
Eigen::Matrix<double, 6, 1> fd_derivative(const Linkage& l, int cycle,
                                          const std::vector<std::vector<double>>& jets, int m,
                                          double h) {
    // m-point stencil via binomial coefficients.
    Eigen::Matrix<double, 6, 1> acc = Eigen::Matrix<double, 6, 1>::Zero();
    double sign = 1.0;
    double binom = 1.0;
    for (int k = 0; k <= m; ++k) {
        double t = (m / 2.0 - k) * h;
        acc += sign * binom * loop_velocity(l, cycle, jets, t);
        sign = -sign;
        binom = binom * (m - k) / (k + 1);
    }
    return acc / std::pow(h, m);
}

std::map<VarId, double> jet_values(const std::vector<std::vector<double>>& jets) {
    std::map<VarId, double> v;
    for (std::size_t j = 0; j < jets.size(); ++j)
        for (std::size_t k = 0; k < jets[j].size(); ++k)
            v[jet_var(static_cast<int>(k) + 1, static_cast<int>(j))] = jets[j][k];
    return v;
}

std::vector<std::vector<double>> random_jets(std::mt19937& rng, int n, int depth) {
    std::uniform_real_distribution<double> d(-0.6, 0.6);
    std::vector<std::vector<double>> jets(n, std::vector<double>(depth));
    for (auto& row : jets)
        for (double& x : row) x = d(rng);
    return jets;
}

} // namespace

TEST_CASE("H^(1) is the linear velocity constraint J * x_1") {
    for (const std::string& doc : {examples::sevenR(), examples::sixbar()}) {
        Linkage l = parse_linkage(doc);
        ConstraintSystem h1 = first_order_system(l);
        RationalMatrix J = first_order_matrix(l);
        CHECK(h1.order == 1);
        for (int cy = 0; cy < l.gamma(); ++cy) {
            for (int c = 0; c < 6; ++c) {
                MultiPoly expect;
                for (int j = 0; j < l.n; ++j)
                    expect = expect + MultiPoly::var(jet_var(1, j)).scale(J.at(6 * cy + c, j));
                CHECK(h1.cycles[cy][c] == expect);
            }
        }
    }
}

TEST_CASE("H^(i) matches finite differences of the loop velocity") {
    Linkage l = parse_linkage(examples::sevenR());
    std::mt19937 rng(17);
    auto jets = random_jets(rng, l.n, 4);
    auto vals = jet_values(jets);
    auto systems = constraint_systems(l, 4);
    for (int i = 1; i <= 4; ++i) {
        auto exact = evaluate(systems[i - 1], vals);
        double h = 0.02;
        auto d1 = fd_derivative(l, 0, jets, i - 1, h);
        auto d2 = fd_derivative(l, 0, jets, i - 1, h / 2);
        for (int c = 0; c < 6; ++c) {
            // Richardson check: halving h shrinks the error ~4x (O(h^2)).
            double e1 = std::abs(d1[c] - exact[0][c]);
            double e2 = std::abs(d2[c] - exact[0][c]);
            CHECK(e2 < 1e-3);
            if (e1 > 1e-8) CHECK(e2 < e1 / 2.5);
        }
    }
}

TEST_CASE("H^(i) is weighted homogeneous of degree i") {
    for (const std::string& doc : {examples::sevenR(), examples::sixbar()}) {
        Linkage l = parse_linkage(doc);
        auto systems = constraint_systems(l, 4);
        for (const ConstraintSystem& sys : systems)
            for (const auto& cycle : sys.cycles)
                for (const MultiPoly& comp : cycle) CHECK(comp.weighted_homogeneous(sys.order));
    }
}

TEST_CASE("highest-order variables enter linearly through the order-1 matrix") {
    Linkage l = parse_linkage(examples::sixbar());
    RationalMatrix J = first_order_matrix(l);
    auto systems = constraint_systems(l, 6);
    for (const ConstraintSystem& sys : systems) {
        for (int cy = 0; cy < l.gamma(); ++cy) {
            for (int c = 0; c < 6; ++c) {
                for (int j = 0; j < l.n; ++j) {
                    VarId top = jet_var(sys.order, j);
                    const MultiPoly& comp = sys.cycles[cy][c];
                    int deg = comp.degree_in(top);
                    REQUIRE(deg <= 1);
                    if (deg == 1) {
                        auto coefs = comp.collect(top);
                        CHECK(coefs[1] == MultiPoly::constant(J.at(6 * cy + c, j)));
                    } else {
                        CHECK(J.at(6 * cy + c, j) == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("derive_next agrees with the direct expansion") {
    Linkage l = parse_linkage(examples::twojoint());
    auto systems = constraint_systems(l, 3);
    ConstraintSystem h2 = derive_next(systems[0], l);
    ConstraintSystem h3 = derive_next(h2, l);
    for (int c = 0; c < 6; ++c) {
        CHECK(h2.cycles[0][c] == systems[1].cycles[0][c]);
        CHECK(h3.cycles[0][c] == systems[2].cycles[0][c]);
    }
}

TEST_CASE("exact evaluation agrees with double evaluation") {
    Linkage l = parse_linkage(examples::sevenR());
    auto systems = constraint_systems(l, 3);
    std::map<VarId, Rat> qvals;
    std::map<VarId, double> dvals;
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int k = 1; k <= 3; ++k)
        for (int j = 0; j < l.n; ++j) {
            Rat r(num(rng), 2);
            r.canonicalize();
            qvals[jet_var(k, j)] = r;
            dvals[jet_var(k, j)] = r.get_d();
        }
    for (const ConstraintSystem& sys : systems) {
        auto qe = evaluate(sys, qvals);
        auto de = evaluate(sys, dvals);
        for (int c = 0; c < 6; ++c) CHECK(qe[0][c].get_d() == doctest::Approx(de[0][c]).epsilon(1e-12));
    }
}
