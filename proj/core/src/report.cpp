#include "tancone/report.hpp"

#include <sstream>

namespace tancone {

namespace {

nlohmann::ordered_json branch_json(const SolutionBranch& b) {
    nlohmann::ordered_json jets = nlohmann::ordered_json::object();
    for (int k = 1; k <= b.order; ++k) {
        nlohmann::ordered_json level = nlohmann::ordered_json::array();
        for (const auto& p : b.x[static_cast<size_t>(k - 1)]) level.push_back(p.to_string());
        jets[std::to_string(k)] = std::move(level);
    }
    nlohmann::ordered_json j;
    j["dim"] = b.dim();
    j["jets"] = std::move(jets);
    if (b.inconclusive) {
        nlohmann::ordered_json unresolved = nlohmann::ordered_json::array();
        for (const auto& c : b.unresolved) unresolved.push_back(c.to_string());
        j["unresolved"] = std::move(unresolved);
    }
    return j;
}

} // namespace

AnalysisReport analyze(const Linkage& linkage, int max_order) {
    AnalysisReport r;
    r.n = linkage.n;
    r.gamma = linkage.gamma();
    r.analysis = tangent_cone(linkage, max_order);
    r.classification = classify(r.analysis);
    return r;
}

nlohmann::ordered_json report_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["kappa"] = r.analysis.cone.kappa;
    j["status"] = status_name(r.analysis.cone.status);
    nlohmann::ordered_json branches = nlohmann::ordered_json::array();
    for (const auto& b : r.analysis.stages.back().branches) branches.push_back(branch_json(b));
    j["branches"] = std::move(branches);
    nlohmann::ordered_json cls;
    cls["kind"] = r.classification.conclusive ? kind_name(r.classification.kind) : "inconclusive";
    nlohmann::ordered_json contacts = nlohmann::ordered_json::array();
    for (const auto& c : r.classification.contacts)
        contacts.push_back(nlohmann::ordered_json::array({c.branch_a, c.branch_b, c.contact_order}));
    cls["contact_orders"] = std::move(contacts);
    cls["kinematotropic"] = r.classification.kinematotropic;
    cls["dead_point"] = r.classification.dead_point;
    j["classification"] = std::move(cls);
    j["n"] = r.n;
    j["gamma"] = r.gamma;
    j["analysis_order"] = static_cast<int>(r.analysis.stages.size());
    return j;
}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "coordinates: " << r.n << ", loops: " << r.gamma << '\n';
    os << "kappa: " << r.analysis.cone.kappa << " (" << status_name(r.analysis.cone.status)
       << "), analyzed to order " << r.analysis.stages.size() << '\n';
    const ConeStage& terminal = r.analysis.stages.back();
    os << "branches: " << terminal.branches.size() << '\n';
    for (size_t i = 0; i < terminal.branches.size(); ++i) {
        const SolutionBranch& b = terminal.branches[i];
        os << "  branch " << i << " (dim " << b.dim() << ")\n";
        for (int k = 1; k <= b.order; ++k) {
            os << "    x_" << k << " = (";
            const auto& level = b.x[static_cast<size_t>(k - 1)];
            for (size_t c = 0; c < level.size(); ++c) {
                if (c) os << ", ";
                os << (level[c].is_zero() ? "0" : level[c].to_string());
            }
            os << ")\n";
        }
        for (const auto& u : b.unresolved) os << "    unresolved: " << u.to_string() << '\n';
    }
    os << "classification: "
       << (r.classification.conclusive ? kind_name(r.classification.kind) : "inconclusive");
    for (const auto& c : r.classification.contacts)
        os << ", contact(" << c.branch_a << "," << c.branch_b << ") = " << c.contact_order;
    if (r.classification.kinematotropic) os << ", kinematotropic";
    if (r.classification.dead_point) os << ", dead-point";
    os << '\n';
    return os.str();
}

int report_exit_code(const AnalysisReport& r) {
    if (!r.classification.conclusive) return 2;
    if (r.analysis.cone.status != ConeStatus::Terminated) return 2;
    return 0;
}

} // namespace tancone
