#include "tancone/verify.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "tancone/examples.hpp"

namespace tancone {

namespace {

struct Expectation {
    int kappa;
    std::vector<int> dims; // canonical branch order (descending dim)
    std::vector<std::vector<Rat>> pi1; // frozen pi_1 basis per branch (columns)
    std::string kind;
    std::vector<std::array<int, 3>> contacts;
    // Frozen screw table, one space-separated 6-vector per scalar coordinate.
    // Some screw coordinates cannot influence the analysis (the motion
    // branches never move the corresponding sub-joint), so reproducing the
    // expected report alone would not prove the document is intact.
    std::vector<std::string> screws;
};

const Expectation& expectation(const std::string& name) {
    // 6-bar: terminal branches are the 2-dim and the 1-dim second-order
    // cone components.
    static const Expectation sixbar{
        2,
        {2, 1},
        {{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0),
          Rat(0), Rat(-1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-1),
          Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-1)},
         {Rat(1), Rat(0), Rat(-1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1), Rat(0), Rat(-1),
          Rat(0), Rat(0), Rat(0)}},
        "transversal-bifurcation",
        {},
        {"1 0 0 0 0 0",   // J1
         "0 0 0 1 0 0",   // J2
         "1 0 0 0 0 -1",  // J3.1
         "0 1 0 0 0 -1",  // J3.2
         "0 0 1 1 1 0",   // J3.3
         "1 0 0 0 0 0",   // J4.1
         "0 0 0 1 0 0",   // J4.2
         "0 1 0 0 0 0",   // J5.1
         "0 0 0 0 1 0",   // J5.2
         "0 1 0 0 0 0",   // J6.1
         "0 0 0 0 1 0",   // J6.2
         "1 0 0 0 0 0",   // J7.1
         "0 0 0 1 0 0"}}; // J7.2
    // 7R: both terminal branches share the line spanned by (3,0,3,0,4,0,4).
    static const Expectation sevenr{
        2,
        {1, 1},
        {{Rat(3), Rat(0), Rat(3), Rat(0), Rat(4), Rat(0), Rat(4)},
         {Rat(3), Rat(0), Rat(3), Rat(0), Rat(4), Rat(0), Rat(4)}},
        "non-transversal-bifurcation",
        {{0, 1, 1}},
        {"3/5 4/5 0 0 0 -6/5",
         "0 3/5 4/5 16/5 0 0",
         "-3/5 4/5 0 0 0 6/5",
         "0 0 1 0 0 0",
         "-4/5 -3/5 0 0 0 -8/5",
         "0 -3/5 4/5 -16/5 0 0",
         "4/5 -3/5 0 0 0 8/5"}};
    if (name == "6-bar") return sixbar;
    if (name == "7R") return sevenr;
    throw std::invalid_argument("unknown bundled example '" + name + "'");
}

// Frozen bases are stored flattened column-major per branch; rebuild the
// matrix with the branch's coordinate count.
RationalMatrix frozen_basis(const std::vector<Rat>& flat, int n) {
    int cols = static_cast<int>(flat.size()) / n;
    RationalMatrix m(n, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = flat[static_cast<size_t>(j * n + i)];
    return m;
}

bool same_space(const RationalMatrix& a, const RationalMatrix& b) {
    return subspace_contains(a, b) && subspace_contains(b, a);
}

} // namespace

std::vector<std::string> verify_example_document(const std::string& name,
                                                 const std::string& document,
                                                 int max_order) {
    const Expectation& ex = expectation(name);
    std::vector<std::string> diffs;
    Linkage linkage = parse_linkage(document);

    if (linkage.n != static_cast<int>(ex.screws.size())) {
        diffs.push_back("coordinate count " + std::to_string(linkage.n) + " != " +
                        std::to_string(ex.screws.size()));
        return diffs;
    }
    for (int c = 0; c < linkage.n; ++c) {
        std::istringstream is(ex.screws[static_cast<size_t>(c)]);
        for (int i = 0; i < 6; ++i) {
            std::string tok;
            is >> tok;
            if (linkage.coord_nominal_screw(c)[i] != parse_rational(tok))
                diffs.push_back("screw table mismatch at coordinate " + linkage.coord_label(c));
        }
    }
    if (!diffs.empty()) return diffs; // document corrupted; skip the analysis

    AnalysisReport report = analyze(linkage, max_order);

    if (report.analysis.cone.kappa != ex.kappa)
        diffs.push_back("kappa " + std::to_string(report.analysis.cone.kappa) + " != " +
                        std::to_string(ex.kappa));
    if (report.analysis.cone.status != ConeStatus::Terminated)
        diffs.push_back("status " + status_name(report.analysis.cone.status) + " != terminated");

    const ConeStage& terminal = report.analysis.stages.back();
    if (terminal.branches.size() != ex.dims.size()) {
        diffs.push_back("branch count " + std::to_string(terminal.branches.size()) + " != " +
                        std::to_string(ex.dims.size()));
    } else {
        for (size_t i = 0; i < ex.dims.size(); ++i) {
            const SolutionBranch& b = terminal.branches[i];
            if (b.dim() != ex.dims[i])
                diffs.push_back("branch " + std::to_string(i) + " dim " + std::to_string(b.dim()) +
                                " != " + std::to_string(ex.dims[i]));
            else if (!same_space(pi1_basis(b), frozen_basis(ex.pi1[i], linkage.n)))
                diffs.push_back("branch " + std::to_string(i) +
                                " first-order space differs from the expected one");
        }
    }

    std::string kind = report.classification.conclusive ? kind_name(report.classification.kind)
                                                        : "inconclusive";
    if (kind != ex.kind) diffs.push_back("kind " + kind + " != " + ex.kind);
    if (report.classification.contacts.size() != ex.contacts.size()) {
        diffs.push_back("contact count mismatch");
    } else {
        for (size_t i = 0; i < ex.contacts.size(); ++i) {
            const auto& c = report.classification.contacts[i];
            if (c.branch_a != ex.contacts[i][0] || c.branch_b != ex.contacts[i][1] ||
                c.contact_order != ex.contacts[i][2])
                diffs.push_back("contact record mismatch");
        }
    }
    return diffs;
}

std::vector<std::string> bundled_example_names() { return {"6-bar", "7R"}; }

const std::string& bundled_example_document(const std::string& name) {
    if (name == "6-bar") return examples::sixbar();
    if (name == "7R") return examples::sevenR();
    throw std::invalid_argument("unknown bundled example '" + name + "'");
}

} // namespace tancone
