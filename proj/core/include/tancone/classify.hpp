#pragma once

#include "tancone/cone.hpp"

namespace tancone {

enum class Sat { Yes, No, Unknown };

// Decides (when possible) whether a finite polynomial system over the
// rationals has a real solution. Linear conditions are eliminated exactly;
// nonlinear ones go through restricted factoring and real-zero reduction.
// Returns Unknown when a condition survives both.
Sat system_solvable(std::vector<MultiPoly> eqs);

// pi_j(a) subseteq pi_j(b), decided by deterministic rational sampling of
// a's parameters followed by exact membership solves against b.
Sat subset_test(const SolutionBranch& a, const SolutionBranch& b, int j);

// Containment of the full jet sets (all orders 1..a.order).
Sat branch_subset(const SolutionBranch& a, const SolutionBranch& b);

// Deterministic rational sample sequence: 1, -1, 2, 1/2, 3, 1/3, ...
Rat sample_value(int index);

enum class LinkageKind {
    RegularPoint,
    SingleBranchSingularity,
    Transversal,
    NonTransversal,
};

std::string kind_name(LinkageKind k);

struct ContactRecord {
    int branch_a = 0;
    int branch_b = 0;
    int contact_order = 0;
};

struct Classification {
    LinkageKind kind = LinkageKind::RegularPoint;
    std::vector<ContactRecord> contacts; // non-transversal pairs only
    bool kinematotropic = false;         // some pair with distinct pi_1 dims
    bool dead_point = false;             // some branch with pi_1 = {0}
    bool conclusive = true;              // false if any subset test was Unknown
};

// Proposition-1 classification of the terminal refinement stage. The stage
// must contain at least one branch and analysis.cone.kappa the stabilization
// order (or -1). Pairs with equal pi_1 are probed order by order for the
// first differing projection; contact order is that order minus one.
Classification classify(const ConeAnalysis& analysis);

} // namespace tancone
