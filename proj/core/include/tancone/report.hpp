#pragma once

#include <json.hpp>

#include "tancone/classify.hpp"
#include "tancone/linkage.hpp"

namespace tancone {

struct AnalysisReport {
    int n = 0;
    int gamma = 0;
    ConeAnalysis analysis;
    Classification classification;
};

AnalysisReport analyze(const Linkage& linkage, int max_order);

// Machine-readable form; key order fixed, rationals rendered as p/q strings
// inside the polynomial expressions, so identical inputs serialize
// byte-identically.
nlohmann::ordered_json report_json(const AnalysisReport& r);

std::string report_text(const AnalysisReport& r);

// Process exit code the report maps to: 0 conclusive, 2 inconclusive.
int report_exit_code(const AnalysisReport& r);

} // namespace tancone
