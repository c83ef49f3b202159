#pragma once

#include <array>
#include <map>

#include "tancone/linkage.hpp"
#include "tancone/poly.hpp"

namespace tancone {

// The order-i loop constraint system H^{(i)}: per cycle, six exact
// polynomial components in the formal derivative variables x_{k,j}
// (k = 1..order, j = flat coordinate). Each component is weighted
// homogeneous of degree `order` under weight(x_{k,j}) = k and linear in the
// highest-order variables, whose coefficient matrix is the order-1 matrix.
struct ConstraintSystem {
    int order = 0;
    int n = 0;
    std::vector<std::array<MultiPoly, 6>> cycles;
};

// Jet assignment for the expansion engine: jets[j][k-1] is the (polynomial)
// value of the k-th derivative of coordinate j at the reference point.
using JetAssignment = std::vector<std::vector<MultiPoly>>;

// Taylor-expands every cycle's constraint mapping along q(t) = sum of
// jets*t^k/k! and returns H^{(i)} = d^{i-1}/dt^{i-1} of the loop velocity
// twist, for i = 1..max_order. This is the recursive evaluation of the
// higher-order constraints; all arithmetic is exact.
std::vector<std::vector<std::array<MultiPoly, 6>>> expand_loop_constraints(const Linkage& linkage,
                                                                           const JetAssignment& jets,
                                                                           int max_order);

// H^{(1)} with fully formal jets. Throws std::domain_error when the
// reference configuration is not exactly representable (q0 != 0 and no
// screw override in the document).
ConstraintSystem first_order_system(const Linkage& linkage);

// H^{(order+1)} from H^{(order)} by formal derivation of the velocity
// constraints.
ConstraintSystem derive_next(const ConstraintSystem& sys, const Linkage& linkage);

// All systems H^{(1)}..H^{(max_order)} with fully formal jets.
std::vector<ConstraintSystem> constraint_systems(const Linkage& linkage, int max_order);

// Stacked 6*gamma x n coefficient matrix of the velocity constraints.
RationalMatrix first_order_matrix(const Linkage& linkage);

std::vector<std::array<Rat, 6>> evaluate(const ConstraintSystem& sys, const std::map<VarId, Rat>& jets);
std::vector<std::array<double, 6>> evaluate(const ConstraintSystem& sys,
                                            const std::map<VarId, double>& jets);

} // namespace tancone
