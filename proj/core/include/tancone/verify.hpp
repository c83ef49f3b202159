#pragma once

#include "tancone/report.hpp"

namespace tancone {

// Checks a linkage document against the frozen expected analysis of one of
// the bundled examples ("6-bar" or "7R"): kappa, termination, branch count,
// branch dimensions, exact first-order projection spaces, classification
// kind and contact records. Returns a human-readable list of differences;
// empty means the document reproduces the expectation.
std::vector<std::string> verify_example_document(const std::string& name,
                                                 const std::string& document,
                                                 int max_order);

std::vector<std::string> bundled_example_names();

// The bundled document for a given example name.
const std::string& bundled_example_document(const std::string& name);

} // namespace tancone
