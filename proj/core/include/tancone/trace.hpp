#pragma once

#include <map>
#include <stdexcept>

#include "tancone/cone.hpp"
#include "tancone/linkage.hpp"

namespace tancone {

struct TracePoint {
    double t = 0.0;
    ConfigD q;       // absolute configuration (q0 + displacement)
    ConfigD delta;   // displacement from q0
    double residual = 0.0;
};

// Finite motion curve through q0: 2M+1 points at t = -M*h .. M*h. The center
// point is q0 exactly; every residual is below the acceptance tolerance.
struct TracedCurve {
    double h = 0.0;
    std::vector<TracePoint> points;
};

struct TraceFailure : std::runtime_error {
    int step;
    TraceFailure(int s, const std::string& msg) : std::runtime_error(msg), step(s) {}
};

constexpr double kCorrectorTol = 1e-12;
constexpr double kAcceptTol = 1e-10;
constexpr int kCorrectorIters = 50;

// Follows the branch from q0: a truncated Taylor predictor from the branch
// jets (all orders the branch carries), then a Gauss-Newton projection onto
// the closure variety constrained orthogonal to the predictor direction.
// `params` assigns every free parameter of the branch; x_1 at those values
// must be nonzero. `pinned` coordinates are held at zero during correction.
TracedCurve trace_branch(const Linkage& linkage, const SolutionBranch& branch,
                         const std::map<VarId, double>& params, int steps, double h,
                         const std::vector<int>& pinned = {});

// Least-squares polynomial fit of degree order+2 through the curve; returns
// jets[k-1][j] = estimated k-th derivative of coordinate j at q0, k=1..order.
// Requires 2M+1 >= order+3 points.
std::vector<std::vector<double>> fit_jets(const TracedCurve& curve, int order);

// Per-cycle rotation-log / translation closure residual stacked into a
// 6*gamma vector; argument is the displacement from q0.
Eigen::VectorXd closure_residual_vector(const Linkage& linkage, const ConfigD& delta);

} // namespace tancone
