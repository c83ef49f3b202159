#include "tancone/classify.hpp"
#include "tancone/factor.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace tancone {

namespace {

// Finds a variable in which c is linear with a constant coefficient
// (newest first) and solves for it: c = a*pivot + rest, pivot = -rest/a.
bool linear_eliminate(const MultiPoly& c, VarId& pivot, MultiPoly& expr) {
    std::set<VarId> vs = c.vars();
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
        if (c.degree_in(*it) != 1) continue;
        std::vector<MultiPoly> by_v = c.collect(*it);
        if (!by_v[1].is_constant()) continue;
        pivot = *it;
        expr = by_v[0].scale(Rat(-1) / by_v[1].constant_value());
        return true;
    }
    return false;
}

bool univariate(const MultiPoly& p, VarId& v) {
    std::set<VarId> vs = p.vars();
    if (vs.size() != 1) return false;
    v = *vs.begin();
    return true;
}

// Does a univariate polynomial have a real root? Decided for odd degree and
// for two-term even polynomials a*v^(2m) + c.
Sat univariate_solvable(const MultiPoly& p, VarId v) {
    int d = p.degree_in(v);
    if (d % 2 == 1) return Sat::Yes;
    std::vector<MultiPoly> coefs = p.collect(v);
    bool two_term = true;
    for (int k = 1; k < d; ++k)
        if (!coefs[static_cast<size_t>(k)].is_zero()) two_term = false;
    if (two_term) {
        Rat a = coefs[static_cast<size_t>(d)].constant_value();
        Rat c = coefs.front().is_zero() ? Rat(0) : coefs.front().constant_value();
        return (Rat(-1) * c / a >= 0) ? Sat::Yes : Sat::No;
    }
    return Sat::Unknown;
}

bool var_in(const std::deque<MultiPoly>& eqs, VarId v, size_t skip) {
    for (size_t i = 0; i < eqs.size(); ++i)
        if (i != skip && eqs[i].degree_in(v) > 0) return true;
    return false;
}

// Monic gcd of two univariate polynomials in v, by the Euclidean algorithm
// over the rationals.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, VarId v) {
    auto coeffs = [&](const MultiPoly& p) {
        std::vector<Rat> c;
        for (const auto& q : p.collect(v)) c.push_back(q.is_zero() ? Rat(0) : q.constant_value());
        while (c.size() > 1 && c.back() == 0) c.pop_back();
        return c;
    };
    std::vector<Rat> x = coeffs(a), y = coeffs(b);
    while (!(y.size() == 1 && y[0] == 0)) {
        // x mod y
        std::vector<Rat> r = x;
        while (r.size() >= y.size() && !(r.size() == 1 && r[0] == 0)) {
            Rat q = r.back() / y.back();
            size_t off = r.size() - y.size();
            for (size_t i = 0; i < y.size(); ++i) r[off + i] -= q * y[i];
            while (r.size() > 1 && r.back() == 0) r.pop_back();
            if (r.size() < y.size()) break;
        }
        x = std::move(y);
        y = std::move(r);
    }
    if (x.size() == 1) return MultiPoly::constant(x[0] == 0 ? Rat(0) : Rat(1));
    MultiPoly g;
    Rat lead = x.back();
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        g += (i == 0 ? MultiPoly::constant(x[i] / lead)
                     : MultiPoly::var(v, static_cast<int>(i)).scale(x[i] / lead));
    }
    return g;
}

Sat solve_system(std::deque<MultiPoly> eqs, int depth) {
    if (depth > 64) return Sat::Unknown;
    for (;;) {
        // Normalize: drop zeros, detect inconsistency, eliminate linears.
        bool progress = false;
        for (size_t i = 0; i < eqs.size();) {
            if (eqs[i].is_zero()) {
                eqs.erase(eqs.begin() + static_cast<long>(i));
                continue;
            }
            if (eqs[i].is_constant()) return Sat::No;
            ++i;
        }
        if (eqs.empty()) return Sat::Yes;
        for (size_t i = 0; i < eqs.size(); ++i) {
            VarId pivot;
            MultiPoly expr;
            if (linear_eliminate(eqs[i], pivot, expr)) {
                std::map<VarId, MultiPoly> sub;
                sub.emplace(pivot, expr);
                eqs.erase(eqs.begin() + static_cast<long>(i));
                for (auto& e : eqs) e = e.substitute(sub);
                progress = true;
                break;
            }
        }
        if (progress) continue;

        // All remaining equations are nonlinear. Combine univariate
        // equations sharing a variable into their gcd: a constant gcd means
        // no common root at all.
        for (size_t i = 0; i < eqs.size() && !progress; ++i) {
            VarId vi;
            if (!univariate(eqs[i], vi)) continue;
            for (size_t j = i + 1; j < eqs.size(); ++j) {
                VarId vj;
                if (!univariate(eqs[j], vj) || vi != vj) continue;
                MultiPoly g = univariate_gcd(eqs[i], eqs[j], vi);
                if (g.is_constant()) return Sat::No;
                eqs.erase(eqs.begin() + static_cast<long>(j));
                eqs[i] = std::move(g);
                progress = true;
                break;
            }
        }
        if (progress) continue;

        // Peel off a univariate equation whose variable appears nowhere else.
        for (size_t i = 0; i < eqs.size(); ++i) {
            VarId v;
            if (!univariate(eqs[i], v) || var_in(eqs, v, i)) continue;
            Sat s = univariate_solvable(eqs[i], v);
            if (s == Sat::No) return Sat::No;
            if (s == Sat::Yes) {
                eqs.erase(eqs.begin() + static_cast<long>(i));
                progress = true;
                break;
            }
        }
        if (progress) continue;

        // Find an equation whose factoring / real reduction makes progress
        // and branch over its alternatives.
        auto monic = [](const MultiPoly& p) { return p.scale(Rat(1) / p.leading().second); };
        for (size_t i = 0; i < eqs.size(); ++i) {
            Factorization f = factor_restricted(eqs[i]);
            RealReduction red = real_zero_reduction(f);
            if (f.scope_exceeded || red.inconclusive) continue;
            bool productive = false;
            for (const auto& alt : red.alternatives)
                if (alt.linear || !(alt.conditions.size() == 1 &&
                                    monic(alt.conditions.front()) == monic(eqs[i])))
                    productive = true;
            if (!productive) continue;
            MultiPoly c = std::move(eqs[i]);
            eqs.erase(eqs.begin() + static_cast<long>(i));
            bool any_unknown = false;
            for (const auto& alt : red.alternatives) {
                bool reduced = alt.linear || !(alt.conditions.size() == 1 &&
                                               monic(alt.conditions.front()) == monic(c));
                if (!reduced) {
                    any_unknown = true;
                    continue;
                }
                std::deque<MultiPoly> sub = eqs;
                for (const auto& g : alt.conditions) sub.push_back(g);
                Sat s = solve_system(std::move(sub), depth + 1);
                if (s == Sat::Yes) return Sat::Yes;
                if (s == Sat::Unknown) any_unknown = true;
            }
            return any_unknown ? Sat::Unknown : Sat::No;
        }
        return Sat::Unknown;
    }
}

std::vector<VarId> branch_params_upto(const SolutionBranch& b, int j) {
    std::set<VarId> seen;
    for (int k = 1; k <= j && k <= b.order; ++k)
        for (const auto& p : b.x[static_cast<size_t>(k - 1)])
            for (VarId v : p.vars())
                if (is_param(v)) seen.insert(v);
    return {seen.begin(), seen.end()};
}

int max_degree_upto(const SolutionBranch& b, int j) {
    int d = 1;
    for (int k = 1; k <= j && k <= b.order; ++k)
        for (const auto& p : b.x[static_cast<size_t>(k - 1)]) d = std::max(d, p.degree());
    return d;
}

// Membership of a sampled jet of `a` in the image of `b`, over orders
// 1..upto.
Sat contains_samples(const SolutionBranch& a, const SolutionBranch& b, int upto) {
    std::vector<VarId> avars = branch_params_upto(a, upto);
    int dim = static_cast<int>(avars.size());
    int maxdeg = std::max(max_degree_upto(a, upto), max_degree_upto(b, upto));
    int samples = 2 * maxdeg * (dim + 1);
    if (samples < 1) samples = 1;
    bool any_unknown = false;
    for (int s = 0; s < samples; ++s) {
        std::map<VarId, Rat> values;
        for (size_t t = 0; t < avars.size(); ++t)
            values[avars[t]] = sample_value(s + 3 * static_cast<int>(t));
        std::deque<MultiPoly> eqs;
        for (int k = 1; k <= upto; ++k) {
            const auto& ax = a.x[static_cast<size_t>(k - 1)];
            const auto& bx = b.x[static_cast<size_t>(k - 1)];
            for (size_t c = 0; c < ax.size(); ++c) {
                Rat target = ax[c].evaluate(values);
                eqs.push_back(bx[c] - MultiPoly::constant(target));
            }
        }
        Sat r = solve_system(std::move(eqs), 0);
        if (r == Sat::No) return Sat::No;
        if (r == Sat::Unknown) any_unknown = true;
    }
    return any_unknown ? Sat::Unknown : Sat::Yes;
}

} // namespace

Rat sample_value(int index) {
    if (index == 0) return Rat(1);
    if (index == 1) return Rat(-1);
    long k = index / 2 + 1;
    if (index % 2 == 0) return Rat(k);
    return Rat(1, k);
}

Sat system_solvable(std::vector<MultiPoly> eqs) {
    return solve_system({eqs.begin(), eqs.end()}, 0);
}

Sat subset_test(const SolutionBranch& a, const SolutionBranch& b, int j) {
    if (j < 1 || j > a.order || j > b.order)
        throw std::out_of_range("subset_test: order out of range");
    std::vector<VarId> avars = branch_params_upto(a, j);
    int dim = static_cast<int>(avars.size());
    int maxdeg = std::max(max_degree_upto(a, j), max_degree_upto(b, j));
    int samples = std::max(1, 2 * maxdeg * (dim + 1));
    bool any_unknown = false;
    for (int s = 0; s < samples; ++s) {
        std::map<VarId, Rat> values;
        for (size_t t = 0; t < avars.size(); ++t)
            values[avars[t]] = sample_value(s + 3 * static_cast<int>(t));
        std::deque<MultiPoly> eqs;
        const auto& ax = a.x[static_cast<size_t>(j - 1)];
        const auto& bx = b.x[static_cast<size_t>(j - 1)];
        for (size_t c = 0; c < ax.size(); ++c) {
            Rat target = ax[c].evaluate(values);
            eqs.push_back(bx[c] - MultiPoly::constant(target));
        }
        Sat r = solve_system(std::move(eqs), 0);
        if (r == Sat::No) return Sat::No;
        if (r == Sat::Unknown) any_unknown = true;
    }
    return any_unknown ? Sat::Unknown : Sat::Yes;
}

Sat branch_subset(const SolutionBranch& a, const SolutionBranch& b) {
    int upto = std::min(a.order, b.order);
    return contains_samples(a, b, upto);
}

std::string kind_name(LinkageKind k) {
    switch (k) {
    case LinkageKind::RegularPoint: return "regular-point";
    case LinkageKind::SingleBranchSingularity: return "single-branch-singularity";
    case LinkageKind::Transversal: return "transversal-bifurcation";
    case LinkageKind::NonTransversal: return "non-transversal-bifurcation";
    }
    return "unknown";
}

Classification classify(const ConeAnalysis& analysis) {
    if (analysis.stages.empty() || analysis.stages.back().branches.empty())
        throw std::invalid_argument("classify: empty analysis");
    const ConeStage& stage = analysis.stages.back();
    Classification out;
    for (const auto& b : stage.branches)
        if (b.dim() == 0) out.dead_point = true;
    if (stage.inconclusive()) out.conclusive = false;

    size_t s = stage.branches.size();
    if (s == 1) {
        out.kind = analysis.cone.kappa == 1 ? LinkageKind::RegularPoint
                                            : LinkageKind::SingleBranchSingularity;
        return out;
    }
    out.kind = LinkageKind::Transversal;
    for (size_t a = 0; a < s; ++a) {
        for (size_t b = a + 1; b < s; ++b) {
            const SolutionBranch& ba = stage.branches[a];
            const SolutionBranch& bb = stage.branches[b];
            RationalMatrix ma = pi1_basis(ba);
            RationalMatrix mb = pi1_basis(bb);
            bool a_in_b = subspace_contains(mb, ma);
            bool b_in_a = subspace_contains(ma, mb);
            if (a_in_b != b_in_a) out.kinematotropic = true; // strict one-way inclusion
            if (!(a_in_b && b_in_a)) continue;
            // Equal first-order projections: probe the higher orders for the
            // first one where the branches separate.
            int upto = std::min(ba.order, bb.order);
            int split = -1;
            bool unknown = false;
            for (int j = 2; j <= upto; ++j) {
                Sat fwd = subset_test(ba, bb, j);
                Sat rev = subset_test(bb, ba, j);
                if (fwd == Sat::Unknown || rev == Sat::Unknown) {
                    unknown = true;
                    break;
                }
                if (fwd == Sat::No || rev == Sat::No) {
                    split = j;
                    break;
                }
            }
            if (unknown || split < 0) {
                out.conclusive = false;
                continue;
            }
            out.kind = LinkageKind::NonTransversal;
            out.contacts.push_back({static_cast<int>(a), static_cast<int>(b), split - 1});
        }
    }
    return out;
}

} // namespace tancone
