#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tancone/rational.hpp"

namespace tancone {

// Variables are either formal jet coordinates x_{k,j} (derivative order k,
// flat joint coordinate j) or free branch parameters introduced at stage k.
// Both carry weight k, which is the grading under which the order-i
// constraint systems are homogeneous of degree i.
using VarId = int;

constexpr VarId kParamBit = 1 << 24;

inline VarId jet_var(int order, int coord) { return (order << 12) | coord; }
inline VarId param_var(int stage, int index) { return kParamBit | (stage << 12) | index; }
inline bool is_param(VarId v) { return (v & kParamBit) != 0; }
inline int var_order(VarId v) { return (v & ~kParamBit) >> 12; }
inline int var_index(VarId v) { return v & 0xfff; }
inline int var_weight(VarId v) { return var_order(v); }

std::string var_name(VarId v);

// Exponent multi-index, sorted by VarId, no zero exponents stored.
struct Mono {
    std::vector<std::pair<VarId, int>> f;

    int degree() const;
    int wdegree() const;
    int degree_in(VarId v) const;
    bool operator==(const Mono& o) const { return f == o.f; }
};

// Graded lexicographic order: total degree first, then lex on exponents
// with lower VarId considered the earlier variable.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

Mono mono_mul(const Mono& a, const Mono& b);
// a / b, or nullopt when b does not divide a.
std::optional<Mono> mono_div(const Mono& a, const Mono& b);

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients stored; the map order is the canonical
// graded-lex order, so structural equality is set equality of terms.
class MultiPoly {
  public:
    using Terms = std::map<Mono, Rat, MonoLess>;

    MultiPoly() = default;
    static MultiPoly constant(const Rat& c);
    static MultiPoly var(VarId v, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (0 if absent); only meaningful together with is_constant.
    Rat constant_value() const;
    int degree() const;
    int wdegree_max() const;
    bool weighted_homogeneous(int weight) const;
    int degree_in(VarId v) const;
    std::set<VarId> vars() const;
    const Terms& terms() const { return terms_; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scale(const Rat& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    // Leading term in graded-lex order. Requires !is_zero().
    std::pair<Mono, Rat> leading() const;

    // Replaces every variable listed in the map; others stay formal.
    MultiPoly substitute(const std::map<VarId, MultiPoly>& assignments) const;

    // Collects *this as a polynomial in v: result[p] = coefficient of v^p.
    std::vector<MultiPoly> collect(VarId v) const;

    // Exact evaluation; throws std::invalid_argument if a variable is unassigned.
    Rat evaluate(const std::map<VarId, Rat>& values) const;
    double evaluate(const std::map<VarId, double>& values) const;

    std::string to_string() const;

    void add_term(const Mono& m, const Rat& c);

  private:
    Terms terms_;
};

// p = q^2 for some polynomial q? If so *root is the one with positive
// leading coefficient.
bool poly_sqrt(const MultiPoly& p, MultiPoly* root);

// Exact division: returns quotient iff divisor*quotient == p.
std::optional<MultiPoly> poly_divide(const MultiPoly& p, const MultiPoly& divisor);

// Dense matrix of rationals.
struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}
    Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    RationalMatrix transposed() const;
    bool operator==(const RationalMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Row-reduced echelon form of [m | b] where b rows are polynomials carried
// along through the row operations. Rows whose matrix part vanished end up
// in `conditions` (their transformed b entries).
struct ReducedSystem {
    RationalMatrix r;                  // RREF of m
    std::vector<MultiPoly> c;          // transformed b, aligned with r's rows
    std::vector<int> pivot_col;        // pivot column per pivot row
    std::vector<int> free_cols;
    std::vector<MultiPoly> conditions; // compatibility: entries that must vanish
};

ReducedSystem reduce_augmented(const RationalMatrix& m, const std::vector<MultiPoly>& b);

int rank(const RationalMatrix& m);

// Exact right nullspace basis; deterministic: one vector per free column in
// column order, unit in the free coordinate.
std::vector<std::vector<Rat>> nullspace(const RationalMatrix& m);

// Exact left nullspace basis (rows L with L*m = 0).
std::vector<std::vector<Rat>> left_nullspace(const RationalMatrix& m);

// Solves m*x = rhs exactly; nullopt when inconsistent. Free coordinates are 0.
std::optional<std::vector<Rat>> solve_particular(const RationalMatrix& m, const std::vector<Rat>& rhs);

} // namespace tancone
