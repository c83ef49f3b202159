#include "tancone/trace.hpp"

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cmath>
#include <sstream>

namespace tancone {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Eigen::VectorXd to_eigen(const ConfigD& v) {
    Eigen::VectorXd e(static_cast<long>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) e[static_cast<long>(i)] = v[i];
    return e;
}

ConfigD from_eigen(const Eigen::VectorXd& e) {
    ConfigD v(static_cast<size_t>(e.size()));
    for (long i = 0; i < e.size(); ++i) v[static_cast<size_t>(i)] = e[i];
    return v;
}

Eigen::MatrixXd residual_jacobian(const Linkage& linkage, const Eigen::VectorXd& delta) {
    const double eps = 1e-7;
    long n = delta.size();
    Eigen::MatrixXd jac(6 * linkage.gamma(), n);
    for (long j = 0; j < n; ++j) {
        Eigen::VectorXd dp = delta, dm = delta;
        dp[j] += eps;
        dm[j] -= eps;
        jac.col(j) = (closure_residual_vector(linkage, from_eigen(dp)) -
                      closure_residual_vector(linkage, from_eigen(dm))) /
                     (2 * eps);
    }
    return jac;
}

} // namespace

Eigen::VectorXd closure_residual_vector(const Linkage& linkage, const ConfigD& delta) {
    Eigen::VectorXd r(6 * linkage.gamma());
    for (int c = 0; c < linkage.gamma(); ++c) {
        PoseD p = constraint_map(linkage, c, delta);
        Eigen::AngleAxisd aa(p.rot);
        r.segment<3>(6 * c) = aa.angle() * aa.axis();
        r.segment<3>(6 * c + 3) = p.trans;
    }
    return r;
}

TracedCurve trace_branch(const Linkage& linkage, const SolutionBranch& branch,
                         const std::map<VarId, double>& params, int steps, double h,
                         const std::vector<int>& pinned) {
    int n = linkage.n;
    std::vector<Eigen::VectorXd> jets; // jets[k-1] = numeric x_k
    for (int k = 1; k <= branch.order; ++k) {
        Eigen::VectorXd d(n);
        for (int j = 0; j < n; ++j)
            d[j] = branch.x[static_cast<size_t>(k - 1)][static_cast<size_t>(j)].evaluate(params);
        jets.push_back(std::move(d));
    }
    if (jets.empty() || jets.front().norm() == 0.0)
        throw std::invalid_argument("trace_branch: x_1 vanishes at the given parameters");

    ConfigD q0(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) q0[static_cast<size_t>(j)] = linkage.q0[static_cast<size_t>(j)].get_d();

    auto predict = [&](double t) {
        Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
        for (size_t k = 0; k < jets.size(); ++k)
            d += jets[k] * (std::pow(t, static_cast<int>(k) + 1) / factorial(static_cast<int>(k) + 1));
        return d;
    };
    auto direction = [&](double t) {
        Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
        for (size_t k = 0; k < jets.size(); ++k)
            d += jets[k] * (std::pow(t, static_cast<int>(k)) / factorial(static_cast<int>(k)));
        double nrm = d.norm();
        return nrm > 0 ? Eigen::VectorXd(d / nrm) : Eigen::VectorXd(jets.front().normalized());
    };

    TracedCurve curve;
    curve.h = h;
    for (int m = -steps; m <= steps; ++m) {
        double t = m * h;
        TracePoint pt;
        pt.t = t;
        if (m == 0) {
            pt.delta.assign(static_cast<size_t>(n), 0.0);
            pt.q = q0;
            pt.residual = 0.0;
            curve.points.push_back(std::move(pt));
            continue;
        }
        Eigen::VectorXd delta = predict(t);
        Eigen::VectorXd dir = direction(t);
        // Step space: orthogonal to the predictor tangent, pinned coords fixed.
        Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) - dir * dir.transpose();
        for (int p : pinned) {
            proj.row(p).setZero();
            delta[p] = 0.0;
        }
        double res = 0.0;
        for (int iter = 0; iter < kCorrectorIters; ++iter) {
            Eigen::VectorXd r = closure_residual_vector(linkage, from_eigen(delta));
            res = r.norm();
            if (res < kCorrectorTol) break;
            Eigen::MatrixXd jac = residual_jacobian(linkage, delta) * proj;
            Eigen::VectorXd step =
                proj * jac.colPivHouseholderQr().solve(-r);
            delta += step;
            if (!delta.allFinite()) break;
        }
        res = closure_residual_vector(linkage, from_eigen(delta)).norm();
        if (!(res < kAcceptTol) || !delta.allFinite()) {
            std::ostringstream os;
            os << "trace failed at step " << m << " (residual " << res << ")";
            throw TraceFailure(m, os.str());
        }
        pt.delta = from_eigen(delta);
        pt.q.resize(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) pt.q[static_cast<size_t>(j)] = q0[static_cast<size_t>(j)] + delta[j];
        pt.residual = res;
        curve.points.push_back(std::move(pt));
    }
    return curve;
}

std::vector<std::vector<double>> fit_jets(const TracedCurve& curve, int order) {
    long pts = static_cast<long>(curve.points.size());
    int deg = order + 2;
    if (pts < deg + 1)
        throw std::invalid_argument("fit_jets: not enough points for the requested order");
    size_t n = curve.points.front().delta.size();
    Eigen::MatrixXd a(pts, deg + 1);
    for (long m = 0; m < pts; ++m) {
        double t = curve.points[static_cast<size_t>(m)].t;
        double p = 1.0;
        for (int d = 0; d <= deg; ++d) {
            a(m, d) = p;
            p *= t;
        }
    }
    auto qr = a.colPivHouseholderQr();
    std::vector<std::vector<double>> jets(static_cast<size_t>(order),
                                          std::vector<double>(n, 0.0));
    Eigen::VectorXd col(pts);
    for (size_t j = 0; j < n; ++j) {
        for (long m = 0; m < pts; ++m) col[m] = curve.points[static_cast<size_t>(m)].delta[j];
        Eigen::VectorXd coef = qr.solve(col);
        for (int k = 1; k <= order; ++k)
            jets[static_cast<size_t>(k - 1)][j] = coef[k] * factorial(k);
    }
    return jets;
}

} // namespace tancone
