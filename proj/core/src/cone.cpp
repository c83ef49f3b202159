#include "tancone/cone.hpp"
#include "tancone/classify.hpp"
#include "tancone/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tancone {

namespace {

void collect_params(const MultiPoly& p, std::set<VarId>& out) {
    for (const auto& [mono, coef] : p.terms()) {
        (void)coef;
        for (const auto& [v, e] : mono.f) {
            (void)e;
            if (is_param(v)) out.insert(v);
        }
    }
}

void collect_params(const std::vector<MultiPoly>& ps, std::set<VarId>& out) {
    for (const auto& p : ps) collect_params(p, out);
}

void refresh_params(SolutionBranch& b) {
    std::set<VarId> seen;
    for (const auto& level : b.x)
        for (const auto& p : level) collect_params(p, seen);
    b.params.assign(seen.begin(), seen.end());
}

void substitute_branch(SolutionBranch& b, VarId pivot, const MultiPoly& expr) {
    std::map<VarId, MultiPoly> sub;
    sub.emplace(pivot, expr);
    for (auto& level : b.x)
        for (auto& p : level) p = p.substitute(sub);
}

// Looks for a variable in which c is linear with a constant (parameter-free)
// coefficient, preferring the newest one; then c = a*pivot + rest solves to
// pivot = -rest/a. This is the substitution step that chains the stage
// conditions into explicit parameter eliminations.
bool solve_linear_in_newest(const MultiPoly& c, VarId& pivot, MultiPoly& expr_out) {
    std::set<VarId> vs = c.vars();
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
        if (c.degree_in(*it) != 1) continue;
        std::vector<MultiPoly> by_v = c.collect(*it);
        if (!by_v[1].is_constant()) continue;
        pivot = *it;
        expr_out = by_v[0].scale(Rat(-1) / by_v[1].constant_value());
        return true;
    }
    return false;
}

struct PendingBranch {
    SolutionBranch branch;
    std::deque<MultiPoly> todo;
};

// Resolves a worklist of compatibility conditions on a branch, splitting it
// into the real alternatives of each nonlinear condition.
std::vector<SolutionBranch> resolve_conditions(SolutionBranch seed,
                                               std::deque<MultiPoly> conditions) {
    std::vector<SolutionBranch> out;
    std::vector<PendingBranch> stack;
    stack.push_back({std::move(seed), std::move(conditions)});
    while (!stack.empty()) {
        PendingBranch pb = std::move(stack.back());
        stack.pop_back();
        bool dead = false;
        while (!pb.todo.empty()) {
            MultiPoly c = pb.todo.front();
            pb.todo.pop_front();
            if (c.is_zero()) continue;
            if (c.is_constant()) { dead = true; break; } // inconsistent: no real point
            MultiPoly expr;
            VarId pivot;
            if (solve_linear_in_newest(c, pivot, expr)) {
                substitute_branch(pb.branch, pivot, expr);
                std::map<VarId, MultiPoly> sub;
                sub.emplace(pivot, expr);
                for (auto& rem : pb.todo) rem = rem.substitute(sub);
                pb.branch.constraints.push_back(c);
                continue;
            }
            Factorization f = factor_restricted(c);
            RealReduction red = real_zero_reduction(f);
            // Fork on the remaining alternatives; the first one stays on this
            // stack frame's worklist. A scope-exceeded factor still yields an
            // alternative; if no further rule applies to it, that fork is
            // flagged unresolved below.
            std::vector<PendingBranch> forks;
            auto monic = [](const MultiPoly& p) { return p.scale(Rat(1) / p.leading().second); };
            for (const auto& alt : red.alternatives) {
                // Anything but the unchanged polynomial is progress: factor
                // splits, radicals, and PSD parts all lower the degree, and
                // linear-in-newest conditions are eliminated on requeue.
                bool progress = alt.linear || !(alt.conditions.size() == 1 &&
                                                monic(alt.conditions.front()) == monic(c));
                PendingBranch fork = pb;
                if (!progress) {
                    fork.branch.inconclusive = true;
                    fork.branch.unresolved.push_back(c);
                } else {
                    for (auto it = alt.conditions.rbegin(); it != alt.conditions.rend(); ++it)
                        fork.todo.push_front(*it);
                }
                forks.push_back(std::move(fork));
            }
            if (forks.empty()) { dead = true; break; } // no real alternative
            for (size_t i = 1; i < forks.size(); ++i) stack.push_back(std::move(forks[i]));
            pb = std::move(forks.front());
        }
        if (dead) continue;
        refresh_params(pb.branch);
        out.push_back(std::move(pb.branch));
    }
    return out;
}

// Splits an order-i constraint component into its (constant-coefficient)
// linear part in the order-i jet variables and the lower-order remainder.
void split_component(const MultiPoly& p, int order, int n, std::vector<Rat>& row,
                     MultiPoly& rest) {
    row.assign(static_cast<size_t>(n), Rat(0));
    rest = MultiPoly();
    for (const auto& [mono, coef] : p.terms()) {
        bool top = false;
        for (const auto& [v, e] : mono.f) {
            if (!is_param(v) && var_order(v) == order) {
                if (mono.degree() != 1 || e != 1)
                    throw std::logic_error("order-i jet variable enters nonlinearly");
                row[static_cast<size_t>(var_index(v))] += coef;
                top = true;
            }
        }
        if (!top) rest.add_term(mono, coef);
    }
}

std::vector<SolutionBranch> advance_branch(const SolutionBranch& prev, const Linkage& linkage,
                                           const RationalMatrix& jac) {
    int i = prev.order + 1;
    int n = linkage.n;
    JetAssignment jets(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int k = 1; k <= prev.order; ++k)
            jets[static_cast<size_t>(j)].push_back(prev.x[static_cast<size_t>(k - 1)][static_cast<size_t>(j)]);
        jets[static_cast<size_t>(j)].push_back(MultiPoly::var(jet_var(i, j)));
    }
    auto per_cycle = expand_loop_constraints(linkage, jets, i);
    std::vector<MultiPoly> rhs;
    for (size_t cy = 0; cy < per_cycle.size(); ++cy) {
        for (int comp = 0; comp < 6; ++comp) {
            std::vector<Rat> row;
            MultiPoly rest;
            split_component(per_cycle[cy][static_cast<size_t>(i - 1)][static_cast<size_t>(comp)], i, n, row,
                            rest);
            size_t r = cy * 6 + static_cast<size_t>(comp);
            for (int j = 0; j < n; ++j)
                if (row[static_cast<size_t>(j)] != jac.at(static_cast<int>(r), j))
                    throw std::logic_error("order-i coefficient matrix differs from the first-order matrix");
            rhs.push_back(std::move(rest));
        }
    }
    ReducedSystem rs = reduce_augmented(jac, rhs);

    SolutionBranch nb = prev;
    nb.order = i;
    std::vector<MultiPoly> xi(static_cast<size_t>(n));
    for (size_t m = 0; m < rs.free_cols.size(); ++m)
        xi[static_cast<size_t>(rs.free_cols[m])] = MultiPoly::var(param_var(i, static_cast<int>(m)));
    for (size_t r = 0; r < rs.pivot_col.size(); ++r) {
        MultiPoly e = rs.c[r].scale(Rat(-1));
        for (size_t m = 0; m < rs.free_cols.size(); ++m) {
            const Rat& a = rs.r.at(static_cast<int>(r), rs.free_cols[m]);
            if (a != 0) e = e - xi[static_cast<size_t>(rs.free_cols[m])].scale(a);
        }
        xi[static_cast<size_t>(rs.pivot_col[r])] = std::move(e);
    }
    nb.x.push_back(std::move(xi));

    std::deque<MultiPoly> todo(rs.conditions.begin(), rs.conditions.end());
    return resolve_conditions(std::move(nb), std::move(todo));
}

void canonicalize(ConeStage& stage) {
    std::sort(stage.branches.begin(), stage.branches.end(),
              [](const SolutionBranch& a, const SolutionBranch& b) {
                  if (a.dim() != b.dim()) return a.dim() > b.dim();
                  return a.canonical_key() < b.canonical_key();
              });
}

void absorb_branches(ConeStage& stage) {
    auto& br = stage.branches;
    // Structural duplicates first.
    std::sort(br.begin(), br.end(), [](const SolutionBranch& a, const SolutionBranch& b) {
        return a.canonical_key() < b.canonical_key();
    });
    br.erase(std::unique(br.begin(), br.end(),
                         [](const SolutionBranch& a, const SolutionBranch& b) {
                             return a.canonical_key() == b.canonical_key();
                         }),
             br.end());
    std::vector<bool> dropped(br.size(), false);
    for (size_t a = 0; a < br.size(); ++a) {
        if (dropped[a]) continue;
        for (size_t b = 0; b < br.size(); ++b) {
            if (a == b || dropped[b] || dropped[a]) continue;
            if (branch_subset(br[a], br[b]) == Sat::Yes) {
                // Mutual containment keeps the lexicographically smaller key.
                if (branch_subset(br[b], br[a]) == Sat::Yes && a < b) continue;
                dropped[a] = true;
            }
        }
    }
    std::vector<SolutionBranch> kept;
    for (size_t a = 0; a < br.size(); ++a)
        if (!dropped[a]) kept.push_back(std::move(br[a]));
    br = std::move(kept);
}

} // namespace

int SolutionBranch::dim() const {
    std::set<VarId> seen;
    if (!x.empty()) collect_params(x.front(), seen);
    return static_cast<int>(seen.size());
}

std::string SolutionBranch::canonical_key() const {
    std::ostringstream os;
    for (const auto& level : x) {
        for (const auto& p : level) os << p.to_string() << ';';
        os << '|';
    }
    return os.str();
}

bool ConeStage::inconclusive() const {
    for (const auto& b : branches)
        if (b.inconclusive) return true;
    return false;
}

std::string status_name(ConeStatus s) {
    switch (s) {
    case ConeStatus::Terminated: return "terminated";
    case ConeStatus::OrderCapped: return "order-capped";
    case ConeStatus::FactoringScopeExceeded: return "factoring-scope-exceeded";
    }
    return "unknown";
}

ConeStage first_stage(const Linkage& linkage) {
    RationalMatrix jac = first_order_matrix(linkage);
    std::vector<std::vector<Rat>> basis = nullspace(jac);
    SolutionBranch b;
    b.order = 1;
    std::vector<MultiPoly> x1(static_cast<size_t>(linkage.n));
    for (size_t m = 0; m < basis.size(); ++m) {
        VarId p = param_var(1, static_cast<int>(m));
        b.params.push_back(p);
        for (int j = 0; j < linkage.n; ++j)
            if (basis[m][static_cast<size_t>(j)] != 0)
                x1[static_cast<size_t>(j)] =
                    x1[static_cast<size_t>(j)] + MultiPoly::var(p).scale(basis[m][static_cast<size_t>(j)]);
    }
    b.x.push_back(std::move(x1));
    ConeStage stage;
    stage.order = 1;
    stage.branches.push_back(std::move(b));
    return stage;
}

ConeStage stage_solve(const ConeStage& prev, const Linkage& linkage) {
    RationalMatrix jac = first_order_matrix(linkage);
    ConeStage next;
    next.order = prev.order + 1;
    for (const auto& b : prev.branches) {
        auto advanced = advance_branch(b, linkage, jac);
        for (auto& nb : advanced) next.branches.push_back(std::move(nb));
    }
    absorb_branches(next);
    // Jet components with x_1 = 0 are reparameterizations of curves through
    // the singular point (jet-scheme components over the origin), not motion
    // branches; keep them only when no branch has a nonzero tangent.
    bool any_moving = false;
    for (const auto& b : next.branches)
        if (b.dim() > 0) any_moving = true;
    if (any_moving) {
        auto& br = next.branches;
        br.erase(std::remove_if(br.begin(), br.end(),
                                [](const SolutionBranch& b) { return b.dim() == 0; }),
                 br.end());
    }
    canonicalize(next);
    return next;
}

ConeAnalysis tangent_cone(const Linkage& linkage, int max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be positive");
    ConeAnalysis out;
    out.stages.push_back(first_stage(linkage));
    int kappa = -1;
    for (int i = 2; i <= max_order; ++i) {
        out.stages.push_back(stage_solve(out.stages.back(), linkage));
        if (kappa < 0 && cone_equal(out.stages[out.stages.size() - 2], out.stages.back()))
            kappa = i - 1;
    }
    out.cone.kappa = kappa;
    if (kappa > 0) {
        out.cone.terminal = out.stages[static_cast<size_t>(kappa - 1)];
        out.cone.status = ConeStatus::Terminated;
    } else {
        out.cone.terminal = out.stages.back();
        out.cone.status = ConeStatus::OrderCapped;
    }
    for (const auto& st : out.stages)
        if (st.inconclusive()) out.cone.status = ConeStatus::FactoringScopeExceeded;
    return out;
}

const std::vector<MultiPoly>& project(const SolutionBranch& branch, int k) {
    if (k < 1 || k > branch.order) throw std::out_of_range("projection order out of range");
    return branch.x[static_cast<size_t>(k - 1)];
}

RationalMatrix pi1_basis(const SolutionBranch& branch) {
    std::set<VarId> seen;
    if (!branch.x.empty()) collect_params(branch.x.front(), seen);
    std::vector<VarId> vars(seen.begin(), seen.end());
    int n = static_cast<int>(branch.x.empty() ? 0 : branch.x.front().size());
    RationalMatrix m(n, static_cast<int>(vars.size()));
    for (int j = 0; j < n; ++j) {
        const MultiPoly& p = branch.x.front()[static_cast<size_t>(j)];
        for (const auto& [mono, coef] : p.terms()) {
            if (mono.degree() != 1) throw std::logic_error("pi_1 expression is not linear");
            VarId v = mono.f.front().first;
            auto it = std::lower_bound(vars.begin(), vars.end(), v);
            m.at(j, static_cast<int>(it - vars.begin())) = coef;
        }
    }
    return m;
}

bool subspace_contains(const RationalMatrix& basis, const RationalMatrix& vectors) {
    if (vectors.cols == 0) return true;
    if (basis.cols == 0) {
        for (int r = 0; r < vectors.rows; ++r)
            for (int c = 0; c < vectors.cols; ++c)
                if (vectors.at(r, c) != 0) return false;
        return true;
    }
    for (int c = 0; c < vectors.cols; ++c) {
        std::vector<Rat> v(static_cast<size_t>(vectors.rows));
        for (int r = 0; r < vectors.rows; ++r) v[static_cast<size_t>(r)] = vectors.at(r, c);
        if (!solve_particular(basis, v)) return false;
    }
    return true;
}

bool cone_equal(const ConeStage& a, const ConeStage& b) {
    auto covered = [](const ConeStage& inner, const ConeStage& outer) {
        for (const auto& ib : inner.branches) {
            RationalMatrix ibasis = pi1_basis(ib);
            bool found = false;
            for (const auto& ob : outer.branches) {
                if (subspace_contains(pi1_basis(ob), ibasis)) { found = true; break; }
            }
            if (!found) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

int default_max_order() {
    if (const char* env = std::getenv("TANCONE_MAX_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 32) return static_cast<int>(v);
    }
    return 6;
}

} // namespace tancone
