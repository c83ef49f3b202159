#include "tancone/hoc.hpp"

#include <stdexcept>

namespace tancone {

namespace {

// 4x4 rational matrix.
using Mat4 = std::array<Rat, 16>;

Mat4 mat4_zero() {
    Mat4 m;
    m.fill(Rat(0));
    return m;
}

Mat4 mat4_identity() {
    Mat4 m = mat4_zero();
    for (int i = 0; i < 4; ++i) m[5 * i] = 1;
    return m;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 c = mat4_zero();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (a[4 * i + k] == 0) continue;
            for (int j = 0; j < 4; ++j) c[4 * i + j] += a[4 * i + k] * b[4 * k + j];
        }
    return c;
}

// hat(Y) = [[skew(w), v], [0, 0]]
Mat4 twist_hat(const TwistQ& y) {
    Mat4 m = mat4_zero();
    m[1] = -y.ang[2];
    m[2] = y.ang[1];
    m[4] = y.ang[2];
    m[6] = -y.ang[0];
    m[8] = -y.ang[1];
    m[9] = y.ang[0];
    m[3] = y.lin[0];
    m[7] = y.lin[1];
    m[11] = y.lin[2];
    return m;
}

// Truncated series of 4x4 matrices with polynomial entries: m[k] is the
// coefficient of t^k, each a flattened 4x4 of MultiPoly.
struct MatSeries {
    std::vector<std::array<MultiPoly, 16>> m;

    static MatSeries identity(int order) {
        MatSeries s;
        s.m.resize(order + 1);
        for (int i = 0; i < 4; ++i) s.m[0][5 * i] = MultiPoly::constant(Rat(1));
        return s;
    }
};

MatSeries series_mul(const MatSeries& a, const MatSeries& b) {
    MatSeries c;
    c.m.resize(a.m.size());
    for (std::size_t k = 0; k < c.m.size(); ++k) {
        for (std::size_t p = 0; p <= k; ++p) {
            const auto& ma = a.m[p];
            const auto& mb = b.m[k - p];
            for (int i = 0; i < 4; ++i)
                for (int kk = 0; kk < 4; ++kk) {
                    if (ma[4 * i + kk].is_zero()) continue;
                    for (int j = 0; j < 4; ++j) {
                        if (mb[4 * kk + j].is_zero()) continue;
                        c.m[k][4 * i + j] += ma[4 * i + kk] * mb[4 * kk + j];
                    }
                }
        }
    }
    return c;
}

// exp(sign * q(t) * hat(Y)) truncated; q given as coefficients of t^1..t^N.
MatSeries exp_series(const std::vector<MultiPoly>& q, int sign, const Mat4& yhat, int trunc) {
    // Power series of the scalar q(t): qpow[p][k] = coeff of t^k in q(t)^p.
    std::vector<std::vector<MultiPoly>> qpow;
    qpow.push_back({MultiPoly::constant(Rat(1))}); // q^0 = 1
    std::vector<MultiPoly> q_shift(trunc + 1);     // q(t) as t^0..trunc coeffs
    for (int k = 1; k <= trunc && k <= static_cast<int>(q.size()); ++k) q_shift[k] = q[k - 1];
    for (int p = 1; p <= trunc; ++p) {
        std::vector<MultiPoly> next(trunc + 1);
        const auto& prev = qpow[p - 1];
        for (int i = 0; i < static_cast<int>(prev.size()); ++i) {
            if (prev[i].is_zero()) continue;
            for (int k = 1; k + i <= trunc; ++k) {
                if (q_shift[k].is_zero()) continue;
                next[i + k] += prev[i] * q_shift[k];
            }
        }
        qpow.push_back(std::move(next));
    }
    // Powers of the constant matrix.
    std::vector<Mat4> ypow{mat4_identity()};
    for (int p = 1; p <= trunc; ++p) ypow.push_back(mat4_mul(ypow.back(), yhat));

    MatSeries out;
    out.m.resize(trunc + 1);
    Rat fact(1);
    Rat sgn_p(1);
    for (int p = 0; p <= trunc; ++p) {
        if (p > 0) {
            fact *= p;
            sgn_p *= sign;
        }
        Rat scale = sgn_p / fact;
        for (int k = (p == 0 ? 0 : p); k <= trunc; ++k) {
            if (p >= static_cast<int>(qpow.size()) || k >= static_cast<int>(qpow[p].size())) continue;
            const MultiPoly& qc = qpow[p][k];
            if (qc.is_zero()) continue;
            MultiPoly scaled = qc.scale(scale);
            for (int e = 0; e < 16; ++e) {
                if (ypow[p][e] == 0) continue;
                out.m[k][e] += scaled.scale(ypow[p][e]);
            }
        }
    }
    return out;
}

std::array<MultiPoly, 6> twist_from_hat(const std::array<MultiPoly, 16>& m) {
    // (w1,w2,w3, v1,v2,v3) from [[skew(w), v],[0,0]].
    return {m[9], m[2], m[4], m[3], m[7], m[11]};
}

} // namespace

std::vector<std::vector<std::array<MultiPoly, 6>>> expand_loop_constraints(const Linkage& linkage,
                                                                           const JetAssignment& jets,
                                                                           int max_order) {
    int trunc = max_order - 1; // V(t) is needed up to t^(max_order-1)
    std::vector<std::vector<std::array<MultiPoly, 6>>> out(linkage.gamma());
    // q_j(t) coefficients (t^1..t^max_order): jets[j][k-1]/k!.
    std::vector<std::vector<MultiPoly>> qcoef(linkage.n);
    for (int j = 0; j < linkage.n; ++j) {
        Rat fact(1);
        for (int k = 1; k <= max_order; ++k) {
            fact *= k;
            MultiPoly c;
            if (j < static_cast<int>(jets.size()) && k - 1 < static_cast<int>(jets[j].size()))
                c = jets[j][k - 1].scale(Rat(1) / fact);
            qcoef[j].push_back(std::move(c));
        }
    }
    for (int l = 0; l < linkage.gamma(); ++l) {
        const FundamentalCycle& fc = linkage.cycles[l];
        MatSeries g = MatSeries::identity(trunc);
        MatSeries ginv = MatSeries::identity(trunc);
        MatSeries v;
        v.m.resize(trunc + 1);
        for (const CycleStep& s : fc.steps) {
            Mat4 yhat = twist_hat(linkage.coord_screw(s.coord));
            MatSeries e = exp_series(qcoef[s.coord], s.sign, yhat, trunc);
            MatSeries einv = exp_series(qcoef[s.coord], -s.sign, yhat, trunc);
            g = series_mul(g, e);
            ginv = series_mul(einv, ginv);
            // S_hat(q(t)) = g * yhat * ginv
            MatSeries yh;
            yh.m.resize(trunc + 1);
            for (int row = 0; row < 4; ++row)
                for (int col = 0; col < 4; ++col)
                    if (yhat[4 * row + col] != 0)
                        yh.m[0][4 * row + col] = MultiPoly::constant(yhat[4 * row + col]);
            MatSeries u = series_mul(series_mul(g, yh), ginv);
            // qdot(t) coefficients of t^0..trunc
            std::vector<MultiPoly> qdot(trunc + 1);
            for (int k = 0; k <= trunc; ++k) {
                if (k + 1 <= static_cast<int>(qcoef[s.coord].size()))
                    qdot[k] = qcoef[s.coord][k].scale(Rat(k + 1)); // coeff of t^(k+1) times (k+1)
            }
            for (int k = 0; k <= trunc; ++k)
                for (int p = 0; p <= k; ++p) {
                    if (qdot[p].is_zero()) continue;
                    for (int e2 = 0; e2 < 16; ++e2) {
                        if (u.m[k - p][e2].is_zero()) continue;
                        v.m[k][e2] += qdot[p].scale(Rat(s.sign)) * u.m[k - p][e2];
                    }
                }
        }
        // H^{(i)} = (i-1)! * [t^(i-1)] V
        Rat fact(1);
        for (int i = 1; i <= max_order; ++i) {
            if (i > 1) fact *= (i - 1);
            auto comps = twist_from_hat(v.m[i - 1]);
            for (auto& c : comps) c = c.scale(fact);
            out[l].push_back(std::move(comps));
        }
    }
    return out;
}

namespace {

void require_representable_reference(const Linkage& linkage) {
    if (linkage.has_override()) return;
    for (const Rat& q : linkage.q0)
        if (q != 0)
            throw std::domain_error(
                "reference configuration q0 != 0 requires exact instantaneous screws "
                "(screws_at_q0) in the linkage document");
}

JetAssignment formal_jets(const Linkage& linkage, int max_order) {
    JetAssignment jets(linkage.n);
    for (int j = 0; j < linkage.n; ++j)
        for (int k = 1; k <= max_order; ++k) jets[j].push_back(MultiPoly::var(jet_var(k, j)));
    return jets;
}

} // namespace

std::vector<ConstraintSystem> constraint_systems(const Linkage& linkage, int max_order) {
    require_representable_reference(linkage);
    auto all = expand_loop_constraints(linkage, formal_jets(linkage, max_order), max_order);
    std::vector<ConstraintSystem> out;
    for (int i = 1; i <= max_order; ++i) {
        ConstraintSystem sys;
        sys.order = i;
        sys.n = linkage.n;
        for (int l = 0; l < linkage.gamma(); ++l) sys.cycles.push_back(all[l][i - 1]);
        out.push_back(std::move(sys));
    }
    return out;
}

ConstraintSystem first_order_system(const Linkage& linkage) {
    return constraint_systems(linkage, 1)[0];
}

ConstraintSystem derive_next(const ConstraintSystem& sys, const Linkage& linkage) {
    return constraint_systems(linkage, sys.order + 1).back();
}

RationalMatrix first_order_matrix(const Linkage& linkage) {
    require_representable_reference(linkage);
    RationalMatrix m(6 * linkage.gamma(), linkage.n);
    for (int l = 0; l < linkage.gamma(); ++l)
        for (const CycleStep& s : linkage.cycles[l].steps) {
            const TwistQ& y = linkage.coord_screw(s.coord);
            for (int r = 0; r < 6; ++r) m.at(6 * l + r, s.coord) += Rat(s.sign) * y[r];
        }
    return m;
}

std::vector<std::array<Rat, 6>> evaluate(const ConstraintSystem& sys, const std::map<VarId, Rat>& jets) {
    std::vector<std::array<Rat, 6>> out;
    for (const auto& cyc : sys.cycles) {
        std::array<Rat, 6> v;
        for (int i = 0; i < 6; ++i) v[i] = cyc[i].evaluate(jets);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::array<double, 6>> evaluate(const ConstraintSystem& sys,
                                            const std::map<VarId, double>& jets) {
    std::vector<std::array<double, 6>> out;
    for (const auto& cyc : sys.cycles) {
        std::array<double, 6> v;
        for (int i = 0; i < 6; ++i) v[i] = cyc[i].evaluate(jets);
        out.push_back(v);
    }
    return out;
}

} // namespace tancone
