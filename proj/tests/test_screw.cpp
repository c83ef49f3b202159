#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "tancone/screw.hpp"

using namespace tancone;

namespace {

Eigen::Matrix4d hat4(const Eigen::Vector3d& w, const Eigen::Vector3d& v) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 1) = -w.z(); m(0, 2) = w.y();
    m(1, 0) = w.z();  m(1, 2) = -w.x();
    m(2, 0) = -w.y(); m(2, 1) = w.x();
    m.block<3, 1>(0, 3) = v;
    return m;
}

// Independent oracle: truncated matrix-exponential power series (30 terms is
// far below double round-off for the |q| <= 3 arguments used here).
Eigen::Matrix4d exp_series_oracle(const Eigen::Matrix4d& a) {
    Eigen::Matrix4d sum = Eigen::Matrix4d::Identity();
    Eigen::Matrix4d term = Eigen::Matrix4d::Identity();
    for (int k = 1; k <= 30; ++k) {
        term = term * a / k;
        sum += term;
    }
    return sum;
}

Eigen::Matrix4d homog(const PoseD& g) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(0, 0) = g.rot;
    m.block<3, 1>(0, 3) = g.trans;
    return m;
}

TwistD random_twist(std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    TwistD t;
    for (int i = 0; i < 3; ++i) {
        t.ang[i] = d(rng);
        t.lin[i] = d(rng);
    }
    return t;
}

TwistQ random_twist_q(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    TwistQ t;
    for (int i = 0; i < 6; ++i) {
        t[i] = Rat(num(rng), den(rng));
        t[i].canonicalize();
    }
    return t;
}

} // namespace

TEST_CASE("exp_twist matches the matrix exponential series") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        TwistD y = random_twist(rng);
        double q = (trial % 7 - 3) * 0.43 + 0.11;
        PoseD g = exp_twist(y, q);
        Eigen::Matrix4d expected = exp_series_oracle(q * hat4(y.ang, y.lin));
        CHECK((homog(g) - expected).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(orthonormality_defect(g.rot) < 1e-12);
    }
}

TEST_CASE("exp_twist pure translation is exact") {
    TwistQ y;
    y[3] = Rat(3, 7);
    y[5] = Rat(-2);
    PoseD g = exp_twist(y, 0.5);
    CHECK((g.rot - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(g.trans.x() == doctest::Approx(0.5 * 3.0 / 7.0).epsilon(1e-15));
    CHECK(g.trans.z() == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("exp additivity along one screw") {
    std::mt19937 rng(11);
    TwistD y = random_twist(rng);
    PoseD a = exp_twist(y, 0.3);
    PoseD b = exp_twist(y, 0.9);
    PoseD ab = compose(a, b);
    PoseD direct = exp_twist(y, 1.2);
    CHECK((ab.rot - direct.rot).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((ab.trans - direct.trans).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("compose/inverse") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        PoseD g = exp_twist(random_twist(rng), 0.7);
        PoseD gi = inverse(g);
        PoseD id = compose(g, gi);
        CHECK((id.rot - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-13);
        CHECK(id.trans.cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("adjoint is the hat-conjugation") {
    // Oracle: hat(Ad_g Y) = G hat(Y) G^-1.
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        PoseD g = exp_twist(random_twist(rng), 1.1);
        TwistD y = random_twist(rng);
        TwistD ad = adjoint_apply(g, y);
        Eigen::Matrix4d lhs = hat4(ad.ang, ad.lin);
        Eigen::Matrix4d gm = homog(g);
        Eigen::Matrix4d rhs = gm * hat4(y.ang, y.lin) * gm.inverse();
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("adjoint is a homomorphism") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        PoseD g1 = exp_twist(random_twist(rng), 0.8);
        PoseD g2 = exp_twist(random_twist(rng), -0.6);
        TwistD y = random_twist(rng);
        TwistD a = adjoint_apply(compose(g1, g2), y);
        TwistD b = adjoint_apply(g1, adjoint_apply(g2, y));
        CHECK((a.vec() - b.vec()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("exact adjoint matches the float adjoint") {
    std::mt19937 rng(23);
    PoseQ gq; // a rational rotation: 3-4-5 rotation about z with translation
    gq.rot = mat3q_identity();
    gq.rot[0][0] = Rat(3, 5); gq.rot[0][1] = Rat(-4, 5);
    gq.rot[1][0] = Rat(4, 5); gq.rot[1][1] = Rat(3, 5);
    gq.trans = {Rat(1), Rat(-2), Rat(1, 2)};
    for (int trial = 0; trial < 20; ++trial) {
        TwistQ y = random_twist_q(rng);
        TwistQ ad = adjoint_apply(gq, y);
        TwistD add = adjoint_apply(to_double(gq), to_double(y));
        for (int i = 0; i < 6; ++i) CHECK(to_double(ad[i]) == doctest::Approx(add.vec()[i]).epsilon(1e-13));
    }
}

TEST_CASE("lie_bracket matches the matrix commutator") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        TwistD a = random_twist(rng), b = random_twist(rng);
        TwistD c = lie_bracket(a, b);
        Eigen::Matrix4d lhs = hat4(c.ang, c.lin);
        Eigen::Matrix4d rhs = hat4(a.ang, a.lin) * hat4(b.ang, b.lin) -
                              hat4(b.ang, b.lin) * hat4(a.ang, a.lin);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("exact lie_bracket is antisymmetric and satisfies Jacobi") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        TwistQ a = random_twist_q(rng), b = random_twist_q(rng), c = random_twist_q(rng);
        TwistQ ab = lie_bracket(a, b);
        TwistQ ba = lie_bracket(b, a);
        for (int i = 0; i < 6; ++i) CHECK(ab[i] == -ba[i]);
        // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0, exactly.
        TwistQ j1 = lie_bracket(lie_bracket(a, b), c);
        TwistQ j2 = lie_bracket(lie_bracket(b, c), a);
        TwistQ j3 = lie_bracket(lie_bracket(c, a), b);
        for (int i = 0; i < 6; ++i) CHECK(j1[i] + j2[i] + j3[i] == 0);
    }
}
