#include "tancone/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tancone {

std::string var_name(VarId v) {
    if (!is_param(v)) {
        return "x" + std::to_string(var_order(v)) + "_" + std::to_string(var_index(v) + 1);
    }
    static const char* letters[] = {"", "s", "y", "z", "u", "v", "w"};
    int stage = var_order(v);
    std::string base = stage >= 1 && stage <= 6 ? letters[stage] : "p" + std::to_string(stage) + "_";
    return base + std::to_string(var_index(v) + 1);
}

int Mono::degree() const {
    int d = 0;
    for (auto& [v, e] : f) d += e;
    return d;
}

int Mono::wdegree() const {
    int d = 0;
    for (auto& [v, e] : f) d += e * var_weight(v);
    return d;
}

int Mono::degree_in(VarId v) const {
    for (auto& [w, e] : f)
        if (w == v) return e;
    return 0;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Lex on exponent vectors, earliest (smallest id) variable decides;
    // the monomial with the higher exponent there is the larger one.
    std::size_t i = 0, j = 0;
    while (i < a.f.size() && j < b.f.size()) {
        if (a.f[i].first != b.f[j].first) {
            // The one owning the earlier variable has positive exponent there.
            return a.f[i].first > b.f[j].first;
        }
        if (a.f[i].second != b.f[j].second) return a.f[i].second < b.f[j].second;
        ++i;
        ++j;
    }
    return i == a.f.size() && j < b.f.size();
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    std::size_t i = 0, j = 0;
    while (i < a.f.size() || j < b.f.size()) {
        if (j == b.f.size() || (i < a.f.size() && a.f[i].first < b.f[j].first)) {
            r.f.push_back(a.f[i++]);
        } else if (i == a.f.size() || b.f[j].first < a.f[i].first) {
            r.f.push_back(b.f[j++]);
        } else {
            r.f.emplace_back(a.f[i].first, a.f[i].second + b.f[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

std::optional<Mono> mono_div(const Mono& a, const Mono& b) {
    Mono r;
    std::size_t i = 0;
    for (auto& [v, e] : b.f) {
        while (i < a.f.size() && a.f[i].first < v) r.f.push_back(a.f[i++]);
        if (i == a.f.size() || a.f[i].first != v || a.f[i].second < e) return std::nullopt;
        if (a.f[i].second > e) r.f.emplace_back(v, a.f[i].second - e);
        ++i;
    }
    while (i < a.f.size()) r.f.push_back(a.f[i++]);
    return r;
}

MultiPoly MultiPoly::constant(const Rat& c) {
    MultiPoly p;
    if (c != 0) p.terms_[Mono{}] = c;
    return p;
}

MultiPoly MultiPoly::var(VarId v, int exp) {
    MultiPoly p;
    if (exp == 0) return constant(Rat(1));
    Mono m;
    m.f.emplace_back(v, exp);
    p.terms_[m] = Rat(1);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.f.empty());
}

Rat MultiPoly::constant_value() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int MultiPoly::wdegree_max() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.wdegree());
    return d;
}

bool MultiPoly::weighted_homogeneous(int weight) const {
    for (auto& [m, c] : terms_)
        if (m.wdegree() != weight) return false;
    return true;
}

int MultiPoly::degree_in(VarId v) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

std::set<VarId> MultiPoly::vars() const {
    std::set<VarId> s;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.f) s.insert(v);
    return s;
}

void MultiPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::scale(const Rat& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

std::pair<Mono, Rat> MultiPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& assignments) const {
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(c);
        Mono untouched;
        for (auto& [v, e] : m.f) {
            auto it = assignments.find(v);
            if (it == assignments.end()) {
                untouched.f.emplace_back(v, e);
            } else {
                for (int k = 0; k < e; ++k) term = term * it->second;
            }
        }
        if (!untouched.f.empty()) {
            MultiPoly mono;
            mono.terms_[untouched] = Rat(1);
            term = term * mono;
        }
        r += term;
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::collect(VarId v) const {
    std::vector<MultiPoly> out(static_cast<std::size_t>(degree_in(v)) + 1);
    for (auto& [m, c] : terms_) {
        int p = m.degree_in(v);
        Mono rest;
        for (auto& [w, e] : m.f)
            if (w != v) rest.f.emplace_back(w, e);
        out[p].add_term(rest, c);
    }
    return out;
}

Rat MultiPoly::evaluate(const std::map<VarId, Rat>& values) const {
    Rat total(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (auto& [v, e] : m.f) {
            auto it = values.find(v);
            if (it == values.end()) throw std::invalid_argument("unassigned variable " + var_name(v));
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

double MultiPoly::evaluate(const std::map<VarId, double>& values) const {
    double total = 0;
    for (auto& [m, c] : terms_) {
        double t = c.get_d();
        for (auto& [v, e] : m.f) {
            auto it = values.find(v);
            if (it == values.end()) throw std::invalid_argument("unassigned variable " + var_name(v));
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool coeff_one = ac == 1 && !m.f.empty();
        if (!coeff_one) os << rat_to_string(ac);
        bool need_star = !coeff_one;
        for (auto& [v, e] : m.f) {
            if (need_star) os << "*";
            os << var_name(v);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

bool poly_sqrt(const MultiPoly& p, MultiPoly* root) {
    if (p.is_zero()) {
        if (root) *root = MultiPoly();
        return true;
    }
    auto [lm, lc] = p.leading();
    Rat rc;
    if (!rational_sqrt(lc, &rc)) return false;
    Mono half;
    for (auto& [v, e] : lm.f) {
        if (e % 2 != 0) return false;
        half.f.emplace_back(v, e / 2);
    }
    MultiPoly q;
    q.add_term(half, rc);
    MultiPoly rem = p - q * q;
    // Determine q term by term from the top of the remainder.
    int guard = 4 * static_cast<int>(p.terms().size()) * (p.degree() + 2) + 64;
    while (!rem.is_zero()) {
        if (--guard < 0) return false;
        auto [rm, rcoef] = rem.leading();
        auto dm = mono_div(rm, half);
        if (!dm) return false;
        MultiPoly t;
        t.add_term(*dm, rcoef / (Rat(2) * rc));
        q += t;
        rem = p - q * q;
    }
    if (root) *root = q;
    return true;
}

std::optional<MultiPoly> poly_divide(const MultiPoly& p, const MultiPoly& divisor) {
    if (divisor.is_zero()) return std::nullopt;
    MultiPoly q, rem = p;
    auto [dm, dc] = divisor.leading();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading();
        auto m = mono_div(rm, dm);
        if (!m) return std::nullopt;
        MultiPoly t;
        t.add_term(*m, rc / dc);
        q += t;
        rem -= t * divisor;
    }
    return q;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

ReducedSystem reduce_augmented(const RationalMatrix& m, const std::vector<MultiPoly>& b) {
    ReducedSystem out;
    out.r = m;
    out.c = b;
    if (out.c.empty()) out.c.assign(m.rows, MultiPoly());
    int row = 0;
    int col = 0;
    for (; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (out.r.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            out.free_cols.push_back(col);
            continue;
        }
        if (piv != row) {
            for (int j = 0; j < m.cols; ++j) std::swap(out.r.at(piv, j), out.r.at(row, j));
            std::swap(out.c[piv], out.c[row]);
        }
        Rat inv = Rat(1) / out.r.at(row, col);
        for (int j = 0; j < m.cols; ++j) out.r.at(row, j) *= inv;
        out.c[row] = out.c[row].scale(inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || out.r.at(i, col) == 0) continue;
            Rat f = out.r.at(i, col);
            for (int j = 0; j < m.cols; ++j) out.r.at(i, j) -= f * out.r.at(row, j);
            out.c[i] -= out.c[row].scale(f);
        }
        out.pivot_col.push_back(col);
        ++row;
    }
    for (; col < m.cols; ++col) out.free_cols.push_back(col);
    for (int i = row; i < m.rows; ++i) out.conditions.push_back(out.c[i]);
    return out;
}

int rank(const RationalMatrix& m) {
    return static_cast<int>(reduce_augmented(m, {}).pivot_col.size());
}

std::vector<std::vector<Rat>> nullspace(const RationalMatrix& m) {
    ReducedSystem rs = reduce_augmented(m, {});
    std::vector<std::vector<Rat>> basis;
    for (int fc : rs.free_cols) {
        std::vector<Rat> v(m.cols, Rat(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < rs.pivot_col.size(); ++r) v[rs.pivot_col[r]] = -rs.r.at(static_cast<int>(r), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rat>> left_nullspace(const RationalMatrix& m) {
    // Eliminate on [m | I]; rows of the identity block where m's part
    // vanished span the cokernel.
    const RationalMatrix& t = m;
    RationalMatrix aug(t.rows, t.cols + t.rows);
    for (int i = 0; i < t.rows; ++i) {
        for (int j = 0; j < t.cols; ++j) aug.at(i, j) = t.at(i, j);
        aug.at(i, t.cols + i) = 1;
    }
    // Row reduce but only pivot inside the first t.cols columns.
    int row = 0;
    for (int col = 0; col < t.cols && row < t.rows; ++col) {
        int piv = -1;
        for (int i = row; i < t.rows; ++i)
            if (aug.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < aug.cols; ++j) std::swap(aug.at(piv, j), aug.at(row, j));
        Rat inv = Rat(1) / aug.at(row, col);
        for (int j = 0; j < aug.cols; ++j) aug.at(row, j) *= inv;
        for (int i = 0; i < t.rows; ++i) {
            if (i == row || aug.at(i, col) == 0) continue;
            Rat f = aug.at(i, col);
            for (int j = 0; j < aug.cols; ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        ++row;
    }
    std::vector<std::vector<Rat>> basis;
    for (int i = row; i < t.rows; ++i) {
        std::vector<Rat> v(t.rows, Rat(0));
        for (int j = 0; j < t.rows; ++j) v[j] = aug.at(i, t.cols + j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_particular(const RationalMatrix& m, const std::vector<Rat>& rhs) {
    std::vector<MultiPoly> b(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) b[i] = MultiPoly::constant(rhs[i]);
    ReducedSystem rs = reduce_augmented(m, b);
    for (const MultiPoly& cond : rs.conditions)
        if (!cond.is_zero()) return std::nullopt;
    std::vector<Rat> x(m.cols, Rat(0));
    for (std::size_t r = 0; r < rs.pivot_col.size(); ++r) x[rs.pivot_col[r]] = rs.c[r].constant_value();
    return x;
}

} // namespace tancone
