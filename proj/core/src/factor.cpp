#include "tancone/factor.hpp"

#include <map>

namespace tancone {

MultiPoly Factorization::expand() const {
    MultiPoly p = MultiPoly::constant(unit);
    for (auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) p = p * f;
    return p;
}

namespace {

// Divides out the gcd of all monomials; returned map holds var -> exponent.
MultiPoly strip_content(const MultiPoly& p, std::map<VarId, int>* content) {
    content->clear();
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        if (first) {
            for (auto& [v, e] : m.f) (*content)[v] = e;
            first = false;
            continue;
        }
        for (auto it = content->begin(); it != content->end();) {
            int e = m.degree_in(it->first);
            if (e == 0) {
                it = content->erase(it);
            } else {
                it->second = std::min(it->second, e);
                ++it;
            }
        }
        if (content->empty()) break;
    }
    if (content->empty()) return p;
    Mono divisor;
    for (auto& [v, e] : *content) divisor.f.emplace_back(v, e);
    MultiPoly divisor_poly;
    divisor_poly.add_term(divisor, Rat(1));
    auto q = poly_divide(p, divisor_poly);
    return *q;
}

MultiPoly make_monic(const MultiPoly& p, Rat* unit) {
    if (p.is_zero()) return p;
    Rat lc = p.leading().second;
    *unit *= lc;
    return p.scale(Rat(1) / lc);
}

void factor_rec(const MultiPoly& p, int mult, Factorization* out);

// Attempts p = g*h through the quadratic formula in a variable of degree 2
// whose discriminant is a perfect polynomial square.
bool try_quadratic_split(const MultiPoly& p, int mult, Factorization* out) {
    for (VarId v : p.vars()) {
        if (p.degree_in(v) != 2) continue;
        auto by_v = p.collect(v);
        const MultiPoly& a = by_v[2];
        const MultiPoly& b = by_v[1];
        const MultiPoly& c = by_v[0];
        MultiPoly disc = b * b - a * c.scale(Rat(4));
        MultiPoly e;
        if (!poly_sqrt(disc, &e)) continue;
        if (e.is_zero()) continue; // perfect square in v; poly_sqrt on p handles it
        MultiPoly av = a * MultiPoly::var(v);
        for (const MultiPoly& g_raw : {av.scale(Rat(2)) + b - e, av.scale(Rat(2)) + b + e}) {
            if (g_raw.is_zero()) continue;
            Rat ignore(1);
            std::map<VarId, int> content;
            MultiPoly g = make_monic(strip_content(g_raw, &content), &ignore);
            if (g.is_constant()) continue;
            auto q = poly_divide(p, g);
            if (!q) continue;
            factor_rec(g, mult, out);
            factor_rec(*q, mult, out);
            return true;
        }
    }
    return false;
}

void factor_rec(const MultiPoly& p, int mult, Factorization* out) {
    MultiPoly q = make_monic(p, &out->unit);
    if (q.is_constant()) return;
    if (q.degree() <= 1) {
        out->factors.emplace_back(q, mult);
        return;
    }
    MultiPoly root;
    if (poly_sqrt(q, &root)) {
        factor_rec(root, 2 * mult, out);
        return;
    }
    if (try_quadratic_split(q, mult, out)) return;
    out->factors.emplace_back(q, mult);
}

} // namespace

Factorization factor_restricted(const MultiPoly& p) {
    Factorization out;
    if (p.is_zero()) {
        out.unit = Rat(0);
        return out;
    }
    std::map<VarId, int> content;
    MultiPoly pp = strip_content(p, &content);
    for (auto& [v, e] : content) out.factors.emplace_back(MultiPoly::var(v), e);
    pp = make_monic(pp, &out.unit);
    if (pp.is_constant()) return out;
    if (pp.degree() > 4 || pp.vars().size() > 3) {
        out.factors.emplace_back(pp, 1);
        out.scope_exceeded = true;
        return out;
    }
    factor_rec(pp, 1, &out);
    // The per-factor monic units multiplied into out.unit must account for
    // multiplicities; factors are monic so re-derive the unit from scratch.
    out.unit = Rat(1);
    MultiPoly check = out.expand();
    // p = unit' * check for a scalar unit'
    auto ratio = poly_divide(p, check);
    out.unit = ratio && ratio->is_constant() ? ratio->constant_value() : Rat(1);
    return out;
}

namespace {

// If p (viewed as a quadratic in one variable with constant leading
// coefficient) is a positive multiple of a sum of squares, returns the
// polynomials whose simultaneous vanishing is its real zero set.
std::optional<std::vector<MultiPoly>> psd_conditions(const MultiPoly& p) {
    for (VarId v : p.vars()) {
        if (p.degree_in(v) != 2) continue;
        auto by_v = p.collect(v);
        if (!by_v[2].is_constant()) continue;
        Rat a = by_v[2].constant_value();
        const MultiPoly& b = by_v[1];
        const MultiPoly& c = by_v[0];
        MultiPoly neg_disc = c.scale(a * 4) - b * b;
        MultiPoly e;
        if (!poly_sqrt(neg_disc, &e)) continue;
        // p = (1/4a) [ (2a v + b)^2 + e^2 ]  -- zero over R iff both vanish.
        std::vector<MultiPoly> conds;
        conds.push_back(MultiPoly::var(v).scale(Rat(2) * a) + b);
        if (!e.is_zero()) conds.push_back(e);
        return conds;
    }
    return std::nullopt;
}

} // namespace

RealReduction real_zero_reduction(const Factorization& f) {
    RealReduction out;
    out.inconclusive = f.scope_exceeded;
    for (auto& [g, mult] : f.factors) {
        (void)mult; // even powers reduce to the radical: same zero set
        RealAlternative alt;
        if (g.degree() <= 1) {
            alt.conditions.push_back(g);
        } else if (auto conds = psd_conditions(g)) {
            alt.conditions = *conds;
        } else {
            alt.conditions.push_back(g);
            alt.linear = false;
        }
        // An alternative containing a nonzero constant condition is
        // unsatisfiable; drop it instead of forwarding a dead fork.
        bool impossible = false;
        for (const MultiPoly& cond : alt.conditions)
            if (cond.is_constant() && !cond.is_zero()) impossible = true;
        if (!impossible) out.alternatives.push_back(std::move(alt));
    }
    if (f.factors.empty()) {
        // constant polynomial: zero set is everything (unit 0) or empty
        RealAlternative alt;
        if (f.unit != 0) alt.conditions.push_back(MultiPoly::constant(f.unit));
        out.alternatives.push_back(std::move(alt));
    }
    return out;
}

} // namespace tancone
