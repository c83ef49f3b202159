#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "tancone/examples.hpp"
#include "tancone/report.hpp"
#include "tancone/verify.hpp"
#include "tancone/trace.hpp"

namespace {

using namespace tancone;

std::map<VarId, double> param_assignment(const SolutionBranch& branch,
                                         const std::vector<double>& values) {
    std::map<VarId, double> out;
    for (size_t i = 0; i < branch.params.size(); ++i)
        out[branch.params[i]] = i < values.size() ? values[i] : 1.0;
    return out;
}

int run_analyze(const std::string& file, int order, const std::string& format, bool trace) {
    Linkage linkage = parse_linkage_file(file);
    AnalysisReport report = analyze(linkage, order);
    if (format == "json") {
        nlohmann::ordered_json j = report_json(report);
        if (trace) {
            nlohmann::ordered_json traces = nlohmann::ordered_json::array();
            const ConeStage& terminal = report.analysis.stages.back();
            for (size_t i = 0; i < terminal.branches.size(); ++i) {
                nlohmann::ordered_json tj;
                tj["branch"] = i;
                try {
                    TracedCurve curve = trace_branch(
                        linkage, terminal.branches[i],
                        param_assignment(terminal.branches[i], {}), 8, 0.02);
                    double worst = 0;
                    for (const auto& p : curve.points) worst = std::max(worst, p.residual);
                    tj["ok"] = true;
                    tj["max_residual"] = worst;
                } catch (const std::exception& e) {
                    tj["ok"] = false;
                    tj["error"] = e.what();
                }
                traces.push_back(std::move(tj));
            }
            j["traces"] = std::move(traces);
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << report_text(report);
        if (trace) {
            const ConeStage& terminal = report.analysis.stages.back();
            for (size_t i = 0; i < terminal.branches.size(); ++i) {
                std::cout << "trace branch " << i << ": ";
                try {
                    TracedCurve curve = trace_branch(
                        linkage, terminal.branches[i],
                        param_assignment(terminal.branches[i], {}), 8, 0.02);
                    double worst = 0;
                    for (const auto& p : curve.points) worst = std::max(worst, p.residual);
                    std::cout << "ok, max residual " << worst << '\n';
                } catch (const std::exception& e) {
                    std::cout << "failed: " << e.what() << '\n';
                }
            }
        }
    }
    return report_exit_code(report);
}

int run_verify() {
    auto names = bundled_example_names();
    int passed = 0;
    for (const std::string& name : names) {
        std::vector<std::string> diffs = verify_example_document(
            name, bundled_example_document(name), default_max_order());
        if (diffs.empty()) {
            ++passed;
        } else {
            std::cout << name << ": FAIL\n";
            for (const auto& d : diffs) std::cout << "  " << d << '\n';
        }
    }
    std::cout << passed << "/" << names.size() << " examples pass\n";
    return passed == static_cast<int>(names.size()) ? 0 : 1;
}

int run_trace(const std::string& file, int branch_index, int steps, double h,
              const std::vector<double>& params, const std::vector<int>& pins) {
    Linkage linkage = parse_linkage_file(file);
    AnalysisReport report = analyze(linkage, default_max_order());
    const ConeStage& terminal = report.analysis.stages.back();
    if (branch_index < 0 || branch_index >= static_cast<int>(terminal.branches.size())) {
        std::cerr << "error: branch index " << branch_index << " out of range (0.."
                  << terminal.branches.size() - 1 << ")\n";
        return 1;
    }
    const SolutionBranch& branch = terminal.branches[static_cast<size_t>(branch_index)];
    TracedCurve curve = trace_branch(linkage, branch, param_assignment(branch, params),
                                     steps, h, pins);
    std::cout << "t";
    for (int j = 0; j < linkage.n; ++j) std::cout << '\t' << linkage.coord_label(j);
    std::cout << "\tresidual\n";
    std::cout.precision(15);
    for (const auto& p : curve.points) {
        std::cout << p.t;
        for (double q : p.q) std::cout << '\t' << q;
        std::cout << '\t' << p.residual << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kinematic tangent cone analysis of linkages"};
    app.require_subcommand(1);

    std::string file;
    int order = tancone::default_max_order();
    std::string format = "text";
    bool with_trace = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a linkage document");
    analyze_cmd->add_option("file", file)->required();
    analyze_cmd->add_option("--order", order, "maximum constraint order");
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    analyze_cmd->add_flag("--trace", with_trace, "verify branches by finite-motion traces");

    auto* verify_cmd = app.add_subcommand("verify-examples", "re-run the bundled examples");

    std::string trace_file;
    int branch_index = 0;
    int steps = 8;
    double h = 0.02;
    std::vector<double> params;
    std::vector<int> pins;
    auto* trace_cmd = app.add_subcommand("trace", "dump a finite motion curve along a branch");
    trace_cmd->set_help_flag("--help", "print help"); // frees -h for the step size
    trace_cmd->add_option("file", trace_file)->required();
    trace_cmd->add_option("--branch", branch_index)->required();
    trace_cmd->add_option("--steps", steps);
    trace_cmd->add_option("--h", h);
    trace_cmd->add_option("--params", params, "branch parameter values, ascending parameter order");
    trace_cmd->add_option("--pin", pins, "coordinate indices held at their reference value");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return run_analyze(file, order, format, with_trace);
        if (verify_cmd->parsed()) return run_verify();
        if (trace_cmd->parsed()) return run_trace(trace_file, branch_index, steps, h, params, pins);
    } catch (const tancone::LinkageParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const tancone::TraceFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
