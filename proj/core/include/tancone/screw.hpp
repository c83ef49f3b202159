#pragma once

#include <Eigen/Dense>
#include <array>

#include "tancone/rational.hpp"

namespace tancone {

using Vec3Q = std::array<Rat, 3>;
using Mat3Q = std::array<std::array<Rat, 3>, 3>;

Vec3Q cross(const Vec3Q& a, const Vec3Q& b);
Vec3Q add(const Vec3Q& a, const Vec3Q& b);
Vec3Q sub(const Vec3Q& a, const Vec3Q& b);
Vec3Q matvec(const Mat3Q& m, const Vec3Q& v);
Mat3Q matmul(const Mat3Q& a, const Mat3Q& b);
Mat3Q mat3q_identity();

// Screw coordinate 6-vector (omega, v) with exact entries. No normalization
// is imposed; any magnitude and pitch is admissible.
struct TwistQ {
    Vec3Q ang{Rat(0), Rat(0), Rat(0)};
    Vec3Q lin{Rat(0), Rat(0), Rat(0)};

    Rat& operator[](int i) { return i < 3 ? ang[i] : lin[i - 3]; }
    const Rat& operator[](int i) const { return i < 3 ? ang[i] : lin[i - 3]; }
    bool operator==(const TwistQ& o) const { return ang == o.ang && lin == o.lin; }
    bool is_zero() const;
};

struct TwistD {
    Eigen::Vector3d ang = Eigen::Vector3d::Zero();
    Eigen::Vector3d lin = Eigen::Vector3d::Zero();

    Eigen::Matrix<double, 6, 1> vec() const {
        Eigen::Matrix<double, 6, 1> v;
        v << ang, lin;
        return v;
    }
};

TwistD to_double(const TwistQ& t);

// Rigid displacement as rotation + translation. The rational variant only
// ever holds values that stay rational under composition (identities,
// adjoint-transported frames from exact input data).
struct PoseQ {
    Mat3Q rot = mat3q_identity();
    Vec3Q trans{Rat(0), Rat(0), Rat(0)};
};

struct PoseD {
    Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
    Eigen::Vector3d trans = Eigen::Vector3d::Zero();
};

PoseD to_double(const PoseQ& g);

// exp(q * Y) via the Rodrigues closed form; the pure-translation case
// (ang exactly zero) takes a separate formula, so no small-angle threshold
// is involved.
PoseD exp_twist(const TwistQ& y, double q);
PoseD exp_twist(const TwistD& y, double q);

PoseD compose(const PoseD& g1, const PoseD& g2);
PoseQ compose(const PoseQ& g1, const PoseQ& g2);
PoseD inverse(const PoseD& g);
PoseQ inverse(const PoseQ& g);

// Ad_g Y: omega' = R*omega, v' = p x (R*omega) + R*v.
TwistD adjoint_apply(const PoseD& g, const TwistD& y);
TwistQ adjoint_apply(const PoseQ& g, const TwistQ& y);

// Screw product [A, B] = (wA x wB, wA x vB - wB x vA).
TwistQ lie_bracket(const TwistQ& a, const TwistQ& b);
TwistD lie_bracket(const TwistD& a, const TwistD& b);

// ||R^T R - I||_inf + |det R - 1|, for invariant checks on the float side.
double orthonormality_defect(const Eigen::Matrix3d& r);

} // namespace tancone
