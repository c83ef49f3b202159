#pragma once

#include "tancone/hoc.hpp"

namespace tancone {

// One component of the order-i solution set: an explicit polynomial
// parameterization of the jets (x_1, ..., x_i) by free parameters, with all
// compatibility conditions already eliminated.
struct SolutionBranch {
    int order = 0;
    std::vector<VarId> params;             // surviving free parameters, ascending
    std::vector<std::vector<MultiPoly>> x; // x[k-1]: n-vector of polynomials, k = 1..order
    std::vector<MultiPoly> constraints;    // eliminated linear conditions, for reporting
    std::vector<MultiPoly> unresolved;     // conditions outside the factoring scope
    bool inconclusive = false;

    int dim() const; // free parameters appearing in x_1
    std::string canonical_key() const;
};

struct ConeStage {
    int order = 0;
    std::vector<SolutionBranch> branches;
    bool inconclusive() const;
};

enum class ConeStatus { Terminated, OrderCapped, FactoringScopeExceeded };

std::string status_name(ConeStatus s);

struct KinematicTangentCone {
    int kappa = -1; // first order at which the cone stabilized (-1: capped)
    ConeStage terminal;
    ConeStatus status = ConeStatus::OrderCapped;
};

// Full staged analysis: stages 1..analysis_order plus the cone summary.
struct ConeAnalysis {
    std::vector<ConeStage> stages;
    KinematicTangentCone cone;
};

// Stage 1: the nullspace of the velocity constraint matrix, one branch.
ConeStage first_stage(const Linkage& linkage);

// Solves the order prev.order+1 constraints on top of every branch of prev:
// the new variables are solved linearly through the (stage-independent)
// first-order matrix, compatibility conditions are factored and reduced to
// real alternatives, and the branch set splits accordingly. Branches whose
// full jet sets are contained in another branch's are absorbed.
ConeStage stage_solve(const ConeStage& prev, const Linkage& linkage);

// Runs stages up to max_order, recording kappa at the first stage whose
// first-order projections equal the previous stage's. Stages beyond kappa
// are still computed: branch structure may keep refining past the cone's
// stabilization order.
ConeAnalysis tangent_cone(const Linkage& linkage, int max_order = 6);

// Projection pi_k: the x_k expression vector of a branch. Throws
// std::out_of_range for k outside 1..order.
const std::vector<MultiPoly>& project(const SolutionBranch& branch, int k);

// Basis (columns) of the linear space pi_1(branch).
RationalMatrix pi1_basis(const SolutionBranch& branch);

// Is the column span of `vectors` contained in the span of basis?
bool subspace_contains(const RationalMatrix& basis, const RationalMatrix& vectors);

// Union-of-subspaces equality of the first-order projections of two stages.
bool cone_equal(const ConeStage& a, const ConeStage& b);

int default_max_order(); // 6, overridable via TANCONE_MAX_ORDER

} // namespace tancone
