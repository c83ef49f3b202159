#include "tancone/linkage.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace tancone {

using nlohmann::json;

int screw_count(JointKind k) {
    switch (k) {
        case JointKind::Cylindrical: return 2;
        case JointKind::Spherical: return 3;
        default: return 1;
    }
}

std::string kind_name(JointKind k) {
    switch (k) {
        case JointKind::Revolute: return "revolute";
        case JointKind::Prismatic: return "prismatic";
        case JointKind::Helical: return "helical";
        case JointKind::Cylindrical: return "cylindrical";
        case JointKind::Spherical: return "spherical";
    }
    return "?";
}

std::string Linkage::coord_label(int coord) const {
    auto [e, s] = coord_owner[coord];
    const Joint& j = edges[e].joint;
    if (j.screws.size() == 1) return j.id;
    return j.id + "." + std::to_string(s + 1);
}

bool Linkage::has_override() const {
    for (const Edge& e : edges)
        if (e.joint.has_override()) return true;
    return false;
}

namespace {

JointKind parse_kind(const std::string& s, const std::string& loc) {
    if (s == "revolute") return JointKind::Revolute;
    if (s == "prismatic") return JointKind::Prismatic;
    if (s == "helical") return JointKind::Helical;
    if (s == "cylindrical") return JointKind::Cylindrical;
    if (s == "spherical") return JointKind::Spherical;
    throw LinkageParseError("unknown joint kind '" + s + "'", loc);
}

std::vector<TwistQ> parse_screw_list(const json& arr, int expected, const std::string& loc) {
    if (!arr.is_array() || arr.size() % 6 != 0)
        throw LinkageParseError("screws must be a flat list of 6 rationals per sub-joint", loc);
    int count = static_cast<int>(arr.size()) / 6;
    if (count != expected)
        throw LinkageParseError("wrong screw count: got " + std::to_string(count) + ", kind requires " +
                                    std::to_string(expected),
                                loc);
    std::vector<TwistQ> out(count);
    for (int s = 0; s < count; ++s) {
        for (int i = 0; i < 6; ++i) {
            const json& v = arr[6 * s + i];
            if (!v.is_string())
                throw LinkageParseError("screw entries must be rational strings", loc);
            try {
                out[s][i] = parse_rational(v.get<std::string>());
            } catch (const RationalParseError& e) {
                throw LinkageParseError(e.what(), loc + "[" + std::to_string(6 * s + i) + "]");
            }
        }
    }
    return out;
}

void validate_tree(const Linkage& l, const std::string& loc) {
    if (static_cast<int>(l.tree_edges.size()) != static_cast<int>(l.bodies.size()) - 1)
        throw LinkageParseError("spanning tree must have |bodies|-1 edges", loc);
    std::vector<int> comp(l.bodies.size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (int e : l.tree_edges) {
        int a = find(l.edges[e].from), b = find(l.edges[e].to);
        if (a == b) throw LinkageParseError("spanning tree contains a cycle", loc);
        comp[a] = b;
    }
}

} // namespace

std::vector<FundamentalCycle> fundamental_cycles(const Linkage& linkage) {
    // Tree adjacency.
    std::vector<std::vector<std::pair<int, int>>> adj(linkage.bodies.size()); // (edge, neighbor)
    std::vector<bool> in_tree(linkage.edges.size(), false);
    for (int e : linkage.tree_edges) {
        in_tree[e] = true;
        adj[linkage.edges[e].from].emplace_back(e, linkage.edges[e].to);
        adj[linkage.edges[e].to].emplace_back(e, linkage.edges[e].from);
    }
    auto edge_coords = [&](int e, bool forward) {
        std::vector<CycleStep> steps;
        int count = static_cast<int>(linkage.edges[e].joint.screws.size());
        for (int s = 0; s < count; ++s) {
            int sub = forward ? s : count - 1 - s;
            int coord = -1;
            for (int c = 0; c < linkage.n; ++c)
                if (linkage.coord_owner[c] == std::make_pair(e, sub)) coord = c;
            steps.push_back({coord, forward ? 1 : -1});
        }
        return steps;
    };
    std::vector<FundamentalCycle> out;
    for (int e = 0; e < static_cast<int>(linkage.edges.size()); ++e) {
        if (in_tree[e]) continue;
        FundamentalCycle fc;
        fc.cotree_edge = e;
        for (CycleStep s : edge_coords(e, true)) fc.steps.push_back(s);
        // Tree path from the co-tree edge's target back to its source.
        int start = linkage.edges[e].to, goal = linkage.edges[e].from;
        std::vector<int> parent_edge(linkage.bodies.size(), -1), parent_node(linkage.bodies.size(), -1);
        std::vector<bool> seen(linkage.bodies.size(), false);
        std::deque<int> bfs{start};
        seen[start] = true;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (auto [pe, w] : adj[v]) {
                if (seen[w]) continue;
                seen[w] = true;
                parent_edge[w] = pe;
                parent_node[w] = v;
                bfs.push_back(w);
            }
        }
        std::vector<std::pair<int, bool>> path; // (edge, traversed forward)
        for (int v = goal; v != start; v = parent_node[v]) {
            int pe = parent_edge[v];
            path.emplace_back(pe, linkage.edges[pe].to == v);
        }
        std::reverse(path.begin(), path.end());
        for (auto [pe, fwd] : path)
            for (CycleStep s : edge_coords(pe, fwd)) fc.steps.push_back(s);
        out.push_back(std::move(fc));
    }
    return out;
}

Linkage parse_linkage(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw LinkageParseError(std::string("invalid JSON: ") + e.what(),
                                "byte " + std::to_string(e.byte));
    }
    Linkage l;
    if (!doc.contains("bodies") || !doc["bodies"].is_array() || doc["bodies"].empty())
        throw LinkageParseError("missing or empty 'bodies' list", "$.bodies");
    std::map<std::string, int> body_index;
    for (const auto& b : doc["bodies"]) {
        std::string name = b.get<std::string>();
        if (body_index.count(name)) throw LinkageParseError("duplicate body '" + name + "'", "$.bodies");
        body_index[name] = static_cast<int>(l.bodies.size());
        l.bodies.push_back(name);
    }
    if (!doc.contains("joints") || !doc["joints"].is_array() || doc["joints"].empty())
        throw LinkageParseError("missing or empty 'joints' list", "$.joints");
    std::map<std::string, int> joint_index;
    for (std::size_t k = 0; k < doc["joints"].size(); ++k) {
        const json& jj = doc["joints"][k];
        std::string loc = "$.joints[" + std::to_string(k) + "]";
        Edge e;
        e.joint.id = jj.at("id").get<std::string>();
        if (joint_index.count(e.joint.id))
            throw LinkageParseError("duplicate joint id '" + e.joint.id + "'", loc);
        e.joint.kind = parse_kind(jj.at("kind").get<std::string>(), loc);
        auto from = body_index.find(jj.at("from").get<std::string>());
        auto to = body_index.find(jj.at("to").get<std::string>());
        if (from == body_index.end() || to == body_index.end())
            throw LinkageParseError("joint endpoints must name declared bodies", loc);
        e.from = from->second;
        e.to = to->second;
        int expected = screw_count(e.joint.kind);
        e.joint.screws = parse_screw_list(jj.at("screws"), expected, loc + ".screws");
        if (jj.contains("screws_at_q0"))
            e.joint.screws_at_q0 = parse_screw_list(jj["screws_at_q0"], expected, loc + ".screws_at_q0");
        joint_index[e.joint.id] = static_cast<int>(l.edges.size());
        l.edges.push_back(std::move(e));
    }
    // Flat coordinate table in document order.
    for (std::size_t e = 0; e < l.edges.size(); ++e)
        for (std::size_t s = 0; s < l.edges[e].joint.screws.size(); ++s)
            l.coord_owner.emplace_back(static_cast<int>(e), static_cast<int>(s));
    l.n = static_cast<int>(l.coord_owner.size());
    l.q0.assign(l.n, Rat(0));
    if (doc.contains("q0")) {
        for (auto it = doc["q0"].begin(); it != doc["q0"].end(); ++it) {
            auto jit = joint_index.find(it.key());
            if (jit == joint_index.end())
                throw LinkageParseError("q0 references unknown joint '" + it.key() + "'", "$.q0");
            const json& vals = it.value();
            const Joint& joint = l.edges[jit->second].joint;
            if (!vals.is_array() || vals.size() != joint.screws.size())
                throw LinkageParseError("q0 entry must list one rational per sub-joint", "$.q0");
            for (std::size_t s = 0; s < vals.size(); ++s) {
                for (int c = 0; c < l.n; ++c)
                    if (l.coord_owner[c] == std::make_pair(jit->second, static_cast<int>(s)))
                        l.q0[c] = parse_rational(vals[s].get<std::string>());
            }
        }
    }
    // Connectivity.
    {
        std::vector<bool> seen(l.bodies.size(), false);
        std::deque<int> bfs{0};
        seen[0] = true;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (const Edge& e : l.edges) {
                int w = -1;
                if (e.from == v) w = e.to;
                if (e.to == v) w = e.from;
                if (w >= 0 && !seen[w]) {
                    seen[w] = true;
                    bfs.push_back(w);
                }
            }
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            throw LinkageParseError("linkage graph is disconnected", "$.joints");
    }
    // Spanning tree: from the document, or breadth-first from the root body.
    if (doc.contains("tree")) {
        for (const auto& t : doc["tree"]) {
            auto it = joint_index.find(t.get<std::string>());
            if (it == joint_index.end())
                throw LinkageParseError("tree references unknown joint '" + t.get<std::string>() + "'",
                                        "$.tree");
            l.tree_edges.push_back(it->second);
        }
        validate_tree(l, "$.tree");
    } else {
        int root = 0;
        if (doc.contains("root")) {
            auto it = body_index.find(doc["root"].get<std::string>());
            if (it == body_index.end())
                throw LinkageParseError("unknown root body", "$.root");
            root = it->second;
        }
        std::vector<bool> seen(l.bodies.size(), false);
        seen[root] = true;
        std::deque<int> bfs{root};
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (std::size_t e = 0; e < l.edges.size(); ++e) {
                int w = -1;
                if (l.edges[e].from == v) w = l.edges[e].to;
                if (l.edges[e].to == v) w = l.edges[e].from;
                if (w >= 0 && !seen[w]) {
                    seen[w] = true;
                    l.tree_edges.push_back(static_cast<int>(e));
                    bfs.push_back(w);
                }
            }
        }
    }
    // Cycles: from the document if present, else computed.
    if (doc.contains("cycles")) {
        for (std::size_t c = 0; c < doc["cycles"].size(); ++c) {
            std::string loc = "$.cycles[" + std::to_string(c) + "]";
            FundamentalCycle fc;
            for (const auto& step : doc["cycles"][c].at("joints")) {
                std::string id = step.at("id").get<std::string>();
                auto it = joint_index.find(id);
                if (it == joint_index.end())
                    throw LinkageParseError("unknown joint in cycle: '" + id + "'", loc);
                int sub = step.value("sub", 1) - 1;
                int sign = step.at("sign").get<int>();
                if (sign != 1 && sign != -1)
                    throw LinkageParseError("cycle signs must be +1 or -1", loc);
                if (sub < 0 || sub >= static_cast<int>(l.edges[it->second].joint.screws.size()))
                    throw LinkageParseError("cycle sub-joint index out of range for '" + id + "'", loc);
                int coord = -1;
                for (int k = 0; k < l.n; ++k)
                    if (l.coord_owner[k] == std::make_pair(it->second, sub)) coord = k;
                if (fc.cotree_edge < 0) fc.cotree_edge = it->second;
                fc.steps.push_back({coord, sign});
            }
            if (fc.steps.empty()) throw LinkageParseError("empty cycle", loc);
            l.cycles.push_back(std::move(fc));
        }
    } else {
        l.cycles = fundamental_cycles(l);
    }
    int expected_gamma = static_cast<int>(l.edges.size()) - static_cast<int>(l.bodies.size()) + 1;
    if (l.gamma() != expected_gamma)
        throw LinkageParseError("number of cycles (" + std::to_string(l.gamma()) +
                                    ") does not match |edges| - |bodies| + 1 = " +
                                    std::to_string(expected_gamma),
                                "$.cycles");
    return l;
}

Linkage parse_linkage_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LinkageParseError("cannot open file", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_linkage(ss.str());
}

PoseD constraint_map(const Linkage& linkage, int cycle, const ConfigD& q) {
    const FundamentalCycle& fc = linkage.cycles.at(cycle);
    PoseD g;
    for (const CycleStep& s : fc.steps) {
        double qi = q[s.coord];
        if (!linkage.has_override()) qi += linkage.q0[s.coord].get_d();
        g = compose(g, exp_twist(linkage.coord_screw(s.coord), s.sign * qi));
    }
    return g;
}

double closure_residual(const Linkage& linkage, const ConfigD& q) {
    double total = 0;
    for (int l = 0; l < linkage.gamma(); ++l) {
        PoseD g = constraint_map(linkage, l, q);
        total += Eigen::AngleAxisd(g.rot).angle() + g.trans.norm();
    }
    return total;
}

std::vector<TwistD> joint_screws_at(const Linkage& linkage, int cycle, const ConfigD& q) {
    const FundamentalCycle& fc = linkage.cycles.at(cycle);
    std::vector<TwistD> out;
    PoseD g;
    for (const CycleStep& s : fc.steps) {
        double qi = q[s.coord];
        if (!linkage.has_override()) qi += linkage.q0[s.coord].get_d();
        g = compose(g, exp_twist(linkage.coord_screw(s.coord), s.sign * qi));
        out.push_back(adjoint_apply(g, to_double(linkage.coord_screw(s.coord))));
    }
    return out;
}

std::vector<TwistQ> screws_at_reference(const Linkage& linkage) {
    std::vector<TwistQ> out;
    out.reserve(linkage.n);
    for (int c = 0; c < linkage.n; ++c) out.push_back(linkage.coord_screw(c));
    return out;
}

} // namespace tancone
