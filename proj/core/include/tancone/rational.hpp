#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace tancone {

// Exact rational scalar used throughout the symbolic pipeline.
using Rat = mpq_class;

struct RationalParseError : std::runtime_error {
    explicit RationalParseError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p" or "p/q" with an optional leading minus. No floats, no whitespace.
Rat parse_rational(const std::string& text);

// Renders as "p" or "p/q" in lowest terms.
std::string rat_to_string(const Rat& r);

// True iff r == s*s for some rational s; if so, *root is the nonnegative root.
bool rational_sqrt(const Rat& r, Rat* root);

inline double to_double(const Rat& r) { return r.get_d(); }

} // namespace tancone
