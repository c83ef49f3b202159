#pragma once

#include <string>
#include <vector>

#include "tancone/screw.hpp"

namespace tancone {

struct LinkageParseError : std::runtime_error {
    std::string location;
    LinkageParseError(const std::string& what, std::string loc)
        : std::runtime_error(what + " (at " + loc + ")"), location(std::move(loc)) {}
};

enum class JointKind { Revolute, Prismatic, Helical, Cylindrical, Spherical };

int screw_count(JointKind k);
std::string kind_name(JointKind k);

// A lower-pair joint decomposed into 1-DOF helical sub-joints: a cylindrical
// joint is a revolute followed by a prismatic, a spherical joint three
// successive revolutes.
struct Joint {
    std::string id;
    JointKind kind = JointKind::Revolute;
    std::vector<TwistQ> screws;
    // Optional instantaneous screws at the analyzed configuration. When set,
    // the analysis and all evaluations run in displacement coordinates with
    // these screws in place of the nominal ones.
    std::vector<TwistQ> screws_at_q0;

    bool has_override() const { return !screws_at_q0.empty(); }
    const TwistQ& effective_screw(int sub) const {
        return has_override() ? screws_at_q0[sub] : screws[sub];
    }
};

struct Edge {
    int from = 0, to = 0; // body indices; direction is the joint polarity
    Joint joint;
};

// One scalar coordinate of a cycle traversal: flat coordinate index plus the
// orientation sign of its edge within this cycle.
struct CycleStep {
    int coord = 0;
    int sign = 1;
};

// Starts with (all coordinates of) the co-tree edge; a reversed edge
// contributes its sub-joints in reverse order with sign -1.
struct FundamentalCycle {
    int cotree_edge = -1;
    std::vector<CycleStep> steps;
};

struct Linkage {
    std::vector<std::string> bodies;
    std::vector<Edge> edges;
    std::vector<int> tree_edges; // indices into edges
    std::vector<FundamentalCycle> cycles;
    int n = 0;                                    // total scalar coordinates
    std::vector<std::pair<int, int>> coord_owner; // coord -> (edge index, sub index)
    std::vector<Rat> q0;                          // reference configuration

    int gamma() const { return static_cast<int>(cycles.size()); }
    const TwistQ& coord_screw(int coord) const {
        auto [e, s] = coord_owner[coord];
        return edges[e].joint.effective_screw(s);
    }
    const TwistQ& coord_nominal_screw(int coord) const {
        auto [e, s] = coord_owner[coord];
        return edges[e].joint.screws[s];
    }
    std::string coord_label(int coord) const;
    bool has_override() const;
};

using ConfigD = std::vector<double>;
using ConfigQ = std::vector<Rat>;

// Parses the JSON linkage document (schema: bodies, joints with exact
// rational screw entries, optional tree / cycles / q0 / root). Throws
// LinkageParseError with a location on any violation.
Linkage parse_linkage(const std::string& document);
Linkage parse_linkage_file(const std::string& path);

// One cycle per co-tree edge, ordered from the co-tree edge along the tree
// path back to its source; signs record edge direction against traversal.
std::vector<FundamentalCycle> fundamental_cycles(const Linkage& linkage);

// Ordered product of exp(sign * q_i * Y_i) along the cycle.
PoseD constraint_map(const Linkage& linkage, int cycle, const ConfigD& q);

// Sum over cycles of rotation-log angle plus translation norm; zero exactly
// on the closure variety.
double closure_residual(const Linkage& linkage, const ConfigD& q);

// Instantaneous screws S_i = Ad_{g_{l,i}(q)} Y_i along one cycle, in
// traversal order.
std::vector<TwistD> joint_screws_at(const Linkage& linkage, int cycle, const ConfigD& q);

// Exact screws at the reference configuration (flat coordinate order):
// the override when present, else the nominal screws (valid at q0 = 0).
std::vector<TwistQ> screws_at_reference(const Linkage& linkage);

} // namespace tancone
