#include "katalan/katalan_term.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace katalan {

KatalanTerm::KatalanTerm(RootIdeal psi, IndexMultiset m, Vec g)
    : ideal(std::move(psi)), multiset(std::move(m)), gamma(std::move(g)) {
    if (multiset.ell() != ideal.ell() || static_cast<int>(gamma.size()) != ideal.ell())
        throw std::invalid_argument("KatalanTerm: ideal, multiset and gamma must share the length");
}

bool KatalanTerm::operator<(const KatalanTerm& o) const {
    if (ideal != o.ideal) return ideal < o.ideal;
    if (multiset != o.multiset) return multiset < o.multiset;
    return gamma < o.gamma;
}

std::string KatalanTerm::to_string() const {
    std::ostringstream os;
    os << "K(start=";
    for (int i = 1; i <= ell(); ++i) {
        if (i > 1) os << ",";
        if (ideal.has_row(i)) os << ideal.start_col(i);
        else os << "-";
    }
    os << "; M=";
    bool first = true;
    os << "{";
    for (int a : multiset.elements()) {
        if (!first) os << ",";
        first = false;
        os << a;
    }
    os << "}; " << vec_to_string(gamma) << ")";
    return os.str();
}

KatalanTerm make_term(const RootIdeal& psi, const RootIdeal& r, Vec gamma) {
    return KatalanTerm(psi, r.second_components(), std::move(gamma));
}

HExpansion evaluate(const KatalanTerm& t) {
    check_degree_cap(positive_degree(t.gamma), "evaluate");
    const int ell = t.ell();
    // (1 - R_ij) over the ideal complement in column-major order, then (1 - L_z).
    std::vector<std::pair<int, int>> rfactors;
    for (int j = 2; j <= ell; ++j)
        for (int i = j - 1; i >= 1; --i)
            if (!t.ideal.contains(i, j)) rfactors.push_back({i, j});

    std::vector<std::vector<char>> raisable_after(rfactors.size() + 1, std::vector<char>(ell, 0));
    for (int s = static_cast<int>(rfactors.size()) - 1; s >= 0; --s) {
        raisable_after[s] = raisable_after[s + 1];
        raisable_after[s][rfactors[s].first - 1] = 1;
    }

    KMonomialSum f = KMonomialSum::single(t.gamma);
    f.prune(raisable_after[0]);
    for (size_t s = 0; s < rfactors.size(); ++s) {
        f.apply_one_minus_raising(rfactors[s].first, rfactors[s].second);
        f.prune(raisable_after[s + 1]);
    }
    const std::vector<char> none(ell, 0);
    for (auto& [z, n] : t.multiset.counts()) {
        for (int rep = 0; rep < n; ++rep) {
            f.apply_one_minus_lowering(z);
            f.prune(none);
        }
    }
    return f.to_h();
}

HExpansion evaluate(const KCombination& c) {
    HExpansion out;
    for (auto& [coeff, term] : c.terms) out += evaluate(term).scaled(coeff);
    return out;
}

HExpansion evaluate_series_oracle(const KatalanTerm& t) {
    const int ell = t.ell();
    if (ell > 5) throw std::invalid_argument("evaluate_series_oracle: oracle scale is ell <= 5");
    check_degree_cap(positive_degree(t.gamma), "evaluate_series_oracle");
    const long long hard_bound = positive_degree(t.gamma) + static_cast<long long>(ell) * ell;

    std::unordered_map<Vec, Int, VecHash> state;
    state.emplace(t.gamma, 1);

    // Geometric series per root, rows processed bottom-up so the lowered
    // column of each root can never be raised again by a later root.
    std::vector<Root> roots = t.ideal.roots();
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        return a.row != b.row ? a.row > b.row : a.col < b.col;
    });
    for (const Root& a : roots) {
        std::unordered_map<Vec, Int, VecHash> next;
        for (auto& [v, c] : state) {
            const long long nmax = static_cast<long long>(v[a.col - 1]) + ell - a.col;
            if (nmax < 0) continue;  // row a.col of every descendant determinant is zero
            if (nmax > hard_bound)
                throw internal_error("evaluate_series_oracle: series bound exceeded");
            Vec w = v;
            for (long long n = 0; n <= nmax; ++n) {
                auto [it, inserted] = next.try_emplace(w, c);
                if (!inserted) {
                    it->second = checked_add(it->second, c);
                    if (it->second == 0) next.erase(it);
                }
                ++w[a.row - 1];
                --w[a.col - 1];
            }
        }
        state = std::move(next);
    }
    for (auto& [z, n] : t.multiset.counts()) {
        for (int rep = 0; rep < n; ++rep) {
            std::unordered_map<Vec, Int, VecHash> shifted;
            shifted.reserve(state.size());
            for (auto& [v, c] : state) {
                Vec w = v;
                --w[z - 1];
                shifted.emplace(std::move(w), c);
            }
            for (auto& [w, c] : shifted) {
                auto [it, inserted] = state.try_emplace(w, checked_mul(c, -1));
                if (!inserted) {
                    it->second = checked_add(it->second, checked_mul(c, -1));
                    if (it->second == 0) state.erase(it);
                }
            }
        }
    }
    HExpansion out;
    std::unordered_map<Vec, HExpansion, VecHash> gmemo;
    for (auto& [v, c] : state) {
        auto it = gmemo.find(v);
        if (it == gmemo.end()) it = gmemo.emplace(v, g_gamma_det(v)).first;
        out += it->second.scaled(c);
    }
    return out;
}

KatalanTerm lower(const KatalanTerm& t, int z) {
    if (z < 1 || z > t.ell())
        throw std::invalid_argument("lower: index outside [1, ell]");
    return KatalanTerm(t.ideal, t.multiset, add_epsilon(t.gamma, z, -1));
}

KatalanTerm lower_power(const KatalanTerm& t, int z, int n) {
    if (n < 0) throw std::invalid_argument("lower_power: negative power");
    KatalanTerm out = t;
    for (int i = 0; i < n; ++i) out = lower(out, z);
    return out;
}

KCombination lower_comb(const KatalanTerm& t, int z, int n) {
    KCombination c;
    if (z > t.ell()) return c;  // L_{z > ell} = 0
    c.add(1, lower_power(t, z, n));
    return c;
}

KCombination recurrence_removable(const KatalanTerm& t, Root beta) {
    if (!t.ideal.is_removable(beta))
        throw std::invalid_argument("recurrence_removable: root (" + std::to_string(beta.row) + "," +
                                    std::to_string(beta.col) + ") is not removable in the ideal");
    KCombination c;
    c.add(1, KatalanTerm(t.ideal.remove_root(beta), t.multiset, t.gamma));
    Vec g = add_epsilon(add_epsilon(t.gamma, beta.row, +1), beta.col, -1);
    c.add(1, KatalanTerm(t.ideal, t.multiset, std::move(g)));
    return c;
}

KCombination recurrence_addable(const KatalanTerm& t, Root alpha) {
    if (!t.ideal.is_addable(alpha))
        throw std::invalid_argument("recurrence_addable: root (" + std::to_string(alpha.row) + "," +
                                    std::to_string(alpha.col) + ") is not addable to the ideal");
    KCombination c;
    RootIdeal bigger = t.ideal.add_root(alpha);
    c.add(1, KatalanTerm(bigger, t.multiset, t.gamma));
    Vec g = add_epsilon(add_epsilon(t.gamma, alpha.row, +1), alpha.col, -1);
    c.add(-1, KatalanTerm(bigger, t.multiset, std::move(g)));
    return c;
}

KCombination recurrence_multiset_remove(const KatalanTerm& t, int m) {
    if (t.multiset.count(m) < 1)
        throw std::invalid_argument("recurrence_multiset_remove: element " + std::to_string(m) +
                                    " is not in the multiset");
    KCombination c;
    IndexMultiset smaller = t.multiset.without(m);
    c.add(1, KatalanTerm(t.ideal, smaller, t.gamma));
    c.add(-1, KatalanTerm(t.ideal, smaller, add_epsilon(t.gamma, m, -1)));
    return c;
}

KCombination recurrence_multiset_add(const KatalanTerm& t, int m) {
    if (m < 1 || m > t.ell())
        throw std::invalid_argument("recurrence_multiset_add: element outside [1, ell]");
    KCombination c;
    c.add(1, KatalanTerm(t.ideal, t.multiset.with(m), t.gamma));
    c.add(1, KatalanTerm(t.ideal, t.multiset, add_epsilon(t.gamma, m, -1)));
    return c;
}

namespace {

// Shared clause checks of the two Mirror Lemmas.  The path ranges degenerate
// to empty when their endpoints are not reachable downward.
struct MirrorContext {
    bool ok = false;
    std::string fail;
    std::vector<int> mirror_range;  // path(y, up(z))
    std::vector<int> down_range;    // path(down(y), z)
};

MirrorContext mirror_context(const KatalanTerm& t, int y, int z) {
    MirrorContext ctx;
    const int ell = t.ell();
    if (!(1 <= y && y <= z && z < ell)) {
        ctx.fail = "indices must satisfy 1 <= y <= z < ell";
        return ctx;
    }
    if (t.ideal.path_segment(y, z).empty()) {
        ctx.fail = "y and z are not in the same bounce path";
        return ctx;
    }
    if (auto u = t.ideal.up(z)) ctx.mirror_range = t.ideal.path_segment(y, *u);
    if (auto d = t.ideal.down(y)) ctx.down_range = t.ideal.path_segment(*d, z);
    ctx.ok = true;
    return ctx;
}

}  // namespace

MirrorHypotheses check_mirror_hypotheses(const KatalanTerm& t, int y, int z) {
    MirrorHypotheses h;
    MirrorContext ctx = mirror_context(t, y, z);
    if (!ctx.ok) {
        h.failed_clause = ctx.fail;
        return h;
    }
    if (!t.ideal.has_ceiling(y)) {
        h.failed_clause = "(a) no ceiling in columns y, y+1";
        return h;
    }
    for (int x : ctx.mirror_range)
        if (!t.ideal.has_mirror(x)) {
            h.failed_clause = "(b) no mirror in rows " + std::to_string(x) + "," + std::to_string(x + 1);
            return h;
        }
    if (!t.ideal.has_wall(z)) {
        h.failed_clause = "(c) no wall in rows z, z+1";
        return h;
    }
    for (int x : ctx.mirror_range)
        if (t.gamma[x - 1] != t.gamma[x]) {
            h.failed_clause = "(d) gamma_" + std::to_string(x) + " != gamma_" + std::to_string(x + 1);
            return h;
        }
    if (t.gamma[z - 1] + 1 != t.gamma[z]) {
        h.failed_clause = "(e) gamma_z + 1 != gamma_{z+1}";
        return h;
    }
    for (int x : ctx.down_range)
        if (t.multiset.count(x) + 1 != t.multiset.count(x + 1)) {
            h.failed_clause = "(f) m_M(" + std::to_string(x) + ") + 1 != m_M(" + std::to_string(x + 1) + ")";
            return h;
        }
    h.satisfied = true;
    return h;
}

MirrorCaseResult mirror_case(const KatalanTerm& t, int y, int z) {
    MirrorCaseResult r;
    r.hypotheses = check_mirror_hypotheses(t, y, z);
    if (!r.hypotheses.satisfied) return r;
    const int my = t.multiset.count(y), my1 = t.multiset.count(y + 1);
    if (my + 1 == my1) {
        r.outcome = MirrorOutcome::Zero;
    } else if (my == my1) {
        r.outcome = MirrorOutcome::Shift;
        r.shift_index = z + 1;
    }
    return r;
}

MirrorHypotheses check_straighten_hypotheses(const KatalanTerm& t, int y, int z) {
    MirrorHypotheses h;
    MirrorContext ctx = mirror_context(t, y, z);
    if (!ctx.ok) {
        h.failed_clause = ctx.fail;
        return h;
    }
    auto u = t.ideal.up(y + 1);
    if (!u) {
        h.failed_clause = "(a) up(y+1) undefined";
        return h;
    }
    if (!t.ideal.is_addable({*u, y})) {
        h.failed_clause = "(a) (up(y+1), y) is not addable";
        return h;
    }
    if (!t.ideal.is_removable({*u, y + 1})) {
        h.failed_clause = "(a) (up(y+1), y+1) is not removable";
        return h;
    }
    for (int x : ctx.mirror_range)
        if (!t.ideal.has_mirror(x)) {
            h.failed_clause = "(b) no mirror in rows " + std::to_string(x) + "," + std::to_string(x + 1);
            return h;
        }
    if (!t.ideal.has_wall(z)) {
        h.failed_clause = "(c) no wall in rows z, z+1";
        return h;
    }
    if (t.multiset.count(y) != t.multiset.count(y + 1)) {
        h.failed_clause = "(d) m_M(y) != m_M(y+1)";
        return h;
    }
    for (int x : ctx.down_range)
        if (t.multiset.count(x) + 1 != t.multiset.count(x + 1)) {
            h.failed_clause = "(e) m_M(" + std::to_string(x) + ") + 1 != m_M(" + std::to_string(x + 1) + ")";
            return h;
        }
    for (int x : ctx.mirror_range)
        if (t.gamma[x - 1] != t.gamma[x]) {
            h.failed_clause = "(f) gamma_" + std::to_string(x) + " != gamma_" + std::to_string(x + 1);
            return h;
        }
    if (t.gamma[z - 1] + 1 != t.gamma[z]) {
        h.failed_clause = "(g) gamma_z + 1 != gamma_{z+1}";
        return h;
    }
    h.satisfied = true;
    return h;
}

MirrorStraightenResult mirror_straighten(const KatalanTerm& t, int y, int z) {
    MirrorStraightenResult r;
    MirrorHypotheses h = check_straighten_hypotheses(t, y, z);
    if (!h.satisfied) {
        r.failed_clause = h.failed_clause;
        return r;
    }
    r.applicable = true;
    const int u = *t.ideal.up(y + 1);
    Vec g1 = add_epsilon(add_epsilon(t.gamma, u, +1), z + 1, -1);
    r.decomposition.add(1, KatalanTerm(t.ideal.add_root({u, y}), t.multiset.with(y + 1), std::move(g1)));
    r.decomposition.add(1, KatalanTerm(t.ideal, t.multiset, add_epsilon(t.gamma, z + 1, -1)));
    return r;
}

KatalanTerm gkk_term(const Vec& v, int k, bool generalized) {
    if (generalized) {
        if (!is_extended_member(v, k))
            throw std::domain_error("gkk: " + vec_to_string(v) + " is not an extended member for k=" +
                                    std::to_string(k));
    } else if (!is_bounded_partition(v, k)) {
        throw std::domain_error("gkk: " + vec_to_string(v) + " is not a k-bounded partition for k=" +
                                std::to_string(k));
    }
    return make_term(RootIdeal::delta_k(v, k), RootIdeal::delta_k(v, k + 1), v);
}

HExpansion gkk(const Vec& v, int k, bool generalized) { return evaluate(gkk_term(v, k, generalized)); }

HExpansion closed_gkk(const Vec& v, int k) {
    if (!is_bounded_partition(v, k))
        throw std::domain_error("closed_gkk: " + vec_to_string(v) + " is not a k-bounded partition");
    RootIdeal dk = RootIdeal::delta_k(v, k);
    return evaluate(make_term(dk, dk, v));
}

std::vector<int> down_columns(const Vec& v, int k) {
    if (!is_bounded_partition(v, k))
        throw std::domain_error("down_columns: input is not a k-bounded partition");
    RootIdeal dk = RootIdeal::delta_k(v, k);
    std::vector<int> d;
    for (int z = 1; z <= dk.bottom(); ++z) {
        auto j = dk.down(z);
        if (!j)
            throw internal_error("down_columns: bottom-section row " + std::to_string(z) +
                                 " has no removable root");
        d.push_back(*j);
    }
    return d;
}

std::vector<int> free_columns(const Vec& v, int k) {
    std::vector<int> d = down_columns(v, k);
    std::vector<char> in_d(v.size() + 1, 0);
    for (int x : d) in_d[x] = 1;
    std::vector<int> out;
    for (int x = 1; x <= static_cast<int>(v.size()); ++x)
        if (!in_d[x]) out.push_back(x);
    return out;
}

HExpansion closed_gkk_via_downs(const Vec& v, int k) {
    std::vector<int> d = down_columns(v, k);
    KatalanTerm base = gkk_term(v, k, false);
    HExpansion out;
    const size_t n = d.size();
    for (size_t mask = 0; mask < (1ull << n); ++mask) {
        Vec g = v;
        int sign = 1;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) {
                g = add_epsilon(g, d[i], -1);
                sign = -sign;
            }
        out += evaluate(KatalanTerm(base.ideal, base.multiset, std::move(g))).scaled(sign);
    }
    return out;
}

namespace {
std::mutex g_cache_mutex;
std::map<std::pair<Vec, int>, HExpansion> g_gkk_cache;
std::map<KatalanTerm, HExpansion> g_eval_cache;
}  // namespace

HExpansion gkk_cached(const Vec& v, int k) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_gkk_cache.find({v, k});
        if (it != g_gkk_cache.end()) return it->second;
    }
    HExpansion f = gkk(v, k);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_gkk_cache.emplace(std::make_pair(v, k), std::move(f)).first->second;
}

HExpansion evaluate_cached(const KatalanTerm& t) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_eval_cache.find(t);
        if (it != g_eval_cache.end()) return it->second;
    }
    HExpansion f = evaluate(t);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_eval_cache.emplace(t, std::move(f)).first->second;
}

void clear_evaluation_caches() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_gkk_cache.clear();
    g_eval_cache.clear();
}

std::string render_grid(const KatalanTerm& t) {
    const int ell = t.ell();
    if (ell > 30) throw std::invalid_argument("render_grid: ell must be <= 30");
    std::ostringstream os;
    int maxmult = 0;
    for (auto& [a, n] : t.multiset.counts()) maxmult = std::max(maxmult, n);

    auto emit_row = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (int j = 0; j < ell; ++j) {
            if (j) line += ' ';
            line += cells[j];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    };

    for (int r = 1; r <= maxmult; ++r) {
        std::vector<std::string> cells(ell, "  ");
        for (int c = 1; c <= ell; ++c)
            if (t.multiset.count(c) >= r) cells[c - 1] = " *";
        emit_row(cells);
    }
    for (int i = 1; i <= ell; ++i) {
        std::vector<std::string> cells(ell, "  ");
        for (int j = 1; j <= ell; ++j) {
            if (i == j) {
                std::string num = std::to_string(t.gamma[i - 1]);
                cells[j - 1] = num.size() >= 2 ? num : " " + num;
            } else if (t.ideal.contains(i, j)) {
                cells[j - 1] = " #";
            }
        }
        emit_row(cells);
    }
    return os.str();
}

}  // namespace katalan
