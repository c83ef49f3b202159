#include "tancone/screw.hpp"

#include <cmath>

namespace tancone {

Vec3Q cross(const Vec3Q& a, const Vec3Q& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3Q add(const Vec3Q& a, const Vec3Q& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3Q sub(const Vec3Q& a, const Vec3Q& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3Q matvec(const Mat3Q& m, const Vec3Q& v) {
    Vec3Q r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

Mat3Q matmul(const Mat3Q& a, const Mat3Q& b) {
    Mat3Q c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            c[i][j] = 0;
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Mat3Q mat3q_identity() {
    Mat3Q m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = Rat(i == j ? 1 : 0);
    return m;
}

bool TwistQ::is_zero() const {
    for (int i = 0; i < 6; ++i)
        if ((*this)[i] != 0) return false;
    return true;
}

TwistD to_double(const TwistQ& t) {
    TwistD d;
    for (int i = 0; i < 3; ++i) {
        d.ang[i] = t.ang[i].get_d();
        d.lin[i] = t.lin[i].get_d();
    }
    return d;
}

PoseD to_double(const PoseQ& g) {
    PoseD d;
    for (int i = 0; i < 3; ++i) {
        d.trans[i] = g.trans[i].get_d();
        for (int j = 0; j < 3; ++j) d.rot(i, j) = g.rot[i][j].get_d();
    }
    return d;
}

static Eigen::Matrix3d skew(const Eigen::Vector3d& w) {
    Eigen::Matrix3d s;
    s << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
    return s;
}

PoseD exp_twist(const TwistQ& y, double q) {
    if (y.ang[0] == 0 && y.ang[1] == 0 && y.ang[2] == 0) {
        // Pure translation, decided exactly on the rational input.
        PoseD g;
        TwistD yd = to_double(y);
        g.trans = q * yd.lin;
        return g;
    }
    return exp_twist(to_double(y), q);
}

PoseD exp_twist(const TwistD& y, double q) {
    PoseD g;
    Eigen::Vector3d w = q * y.ang;
    Eigen::Vector3d v = q * y.lin;
    double phi = w.norm();
    if (phi == 0.0) {
        g.trans = v;
        return g;
    }
    Eigen::Matrix3d wh = skew(w);
    double s = std::sin(phi), c = std::cos(phi);
    g.rot = Eigen::Matrix3d::Identity() + (s / phi) * wh + ((1.0 - c) / (phi * phi)) * wh * wh;
    Eigen::Matrix3d vmat = Eigen::Matrix3d::Identity() + ((1.0 - c) / (phi * phi)) * wh +
                           ((phi - s) / (phi * phi * phi)) * wh * wh;
    g.trans = vmat * v;
    return g;
}

PoseD compose(const PoseD& g1, const PoseD& g2) {
    PoseD g;
    g.rot = g1.rot * g2.rot;
    g.trans = g1.rot * g2.trans + g1.trans;
    return g;
}

PoseQ compose(const PoseQ& g1, const PoseQ& g2) {
    PoseQ g;
    g.rot = matmul(g1.rot, g2.rot);
    g.trans = add(matvec(g1.rot, g2.trans), g1.trans);
    return g;
}

PoseD inverse(const PoseD& g) {
    PoseD r;
    r.rot = g.rot.transpose();
    r.trans = -(r.rot * g.trans);
    return r;
}

PoseQ inverse(const PoseQ& g) {
    PoseQ r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.rot[i][j] = g.rot[j][i];
    Vec3Q t = matvec(r.rot, g.trans);
    r.trans = {-t[0], -t[1], -t[2]};
    return r;
}

TwistD adjoint_apply(const PoseD& g, const TwistD& y) {
    TwistD r;
    r.ang = g.rot * y.ang;
    r.lin = g.trans.cross(r.ang) + g.rot * y.lin;
    return r;
}

TwistQ adjoint_apply(const PoseQ& g, const TwistQ& y) {
    TwistQ r;
    r.ang = matvec(g.rot, y.ang);
    r.lin = add(cross(g.trans, r.ang), matvec(g.rot, y.lin));
    return r;
}

TwistQ lie_bracket(const TwistQ& a, const TwistQ& b) {
    TwistQ r;
    r.ang = cross(a.ang, b.ang);
    r.lin = sub(cross(a.ang, b.lin), cross(b.ang, a.lin));
    return r;
}

TwistD lie_bracket(const TwistD& a, const TwistD& b) {
    TwistD r;
    r.ang = a.ang.cross(b.ang);
    r.lin = a.ang.cross(b.lin) - b.ang.cross(a.lin);
    return r;
}

double orthonormality_defect(const Eigen::Matrix3d& r) {
    Eigen::Matrix3d d = r.transpose() * r - Eigen::Matrix3d::Identity();
    return d.cwiseAbs().maxCoeff() + std::abs(r.determinant() - 1.0);
}

} // namespace tancone
