#include "katalan/cores.hpp"

#include <algorithm>
#include <functional>

namespace katalan {

namespace {

Vec canonical_partition(const Vec& p, const char* where) {
    Vec q = strip_trailing_zeros(p);
    if (!is_partition_vec(q))
        throw std::domain_error(std::string(where) + ": " + vec_to_string(p) + " is not a partition");
    return q;
}

}  // namespace

std::vector<std::vector<int>> hook_lengths(const Vec& p) {
    Vec q = canonical_partition(p, "hook_lengths");
    const int rows = static_cast<int>(q.size());
    std::vector<std::vector<int>> out(rows);
    for (int i = 1; i <= rows; ++i) {
        out[i - 1].resize(q[i - 1]);
        for (int j = 1; j <= q[i - 1]; ++j) {
            int leg = 0;
            for (int r = i + 1; r <= rows; ++r)
                if (q[r - 1] >= j) ++leg;
            out[i - 1][j - 1] = (q[i - 1] - j) + leg + 1;
        }
    }
    return out;
}

bool is_r_core(const Vec& p, int r) {
    if (r < 1) throw std::invalid_argument("is_r_core: r must be >= 1");
    for (const auto& row : hook_lengths(p))
        for (int h : row)
            if (h == r) return false;
    return true;
}

Vec p_map(const Core& kappa, int k) {
    if (kappa.r != k + 1)
        throw std::domain_error("p_map: core avoids hook " + std::to_string(kappa.r) + ", expected k+1=" +
                                std::to_string(k + 1));
    if (!is_r_core(kappa.shape, k + 1))
        throw std::domain_error("p_map: " + vec_to_string(kappa.shape) + " is not a " +
                                std::to_string(k + 1) + "-core");
    Vec out;
    for (const auto& row : hook_lengths(kappa.shape)) {
        int n = 0;
        for (int h : row)
            if (h <= k) ++n;
        out.push_back(n);
    }
    if (!is_bounded_partition(out, k))
        throw internal_error("p_map: hook counts " + vec_to_string(out) + " are not a k-bounded partition");
    return strip_trailing_zeros(out);
}

Core c_map(const Vec& lambda, int k) {
    Vec lam = canonical_partition(lambda, "c_map");
    if (!is_bounded_partition(lam, k))
        throw std::domain_error("c_map: " + vec_to_string(lambda) + " is not k-bounded");
    const int rows = static_cast<int>(lam.size());
    std::vector<int> built;  // row lengths below the current row, top first
    for (int i = rows; i >= 1; --i) {
        const int want = lam[i - 1];
        const int cap = want + (k + 1) * (rows - i + 2);
        int chosen = -1;
        for (int len = want; len <= cap; ++len) {
            bool valid = true;
            int small_hooks = 0;
            for (int j = 1; j <= len && valid; ++j) {
                int leg = 0;
                for (int below : built)
                    if (below >= j) ++leg;
                const int hook = (len - j) + leg + 1;
                if (hook == k + 1) valid = false;
                else if (hook <= k) ++small_hooks;
            }
            if (valid && small_hooks == want) {
                chosen = len;
                break;
            }
        }
        if (chosen < 0)
            throw internal_error("c_map: no admissible length for row " + std::to_string(i) + " of " +
                                 vec_to_string(lambda));
        built.insert(built.begin(), chosen);
    }
    Core out{Vec(built.begin(), built.end()), k + 1};
    if (!is_partition_vec(out.shape) || !is_r_core(out.shape, k + 1) || p_map(out, k) != lam)
        throw internal_error("c_map: construction failed the round-trip certificate for " +
                             vec_to_string(lambda));
    return out;
}

bool core_contains(const Vec& inner, const Vec& outer) {
    for (size_t i = 0; i < inner.size(); ++i) {
        int o = i < outer.size() ? outer[i] : 0;
        if (inner[i] > o) return false;
    }
    return true;
}

bool bruhat_leq(const Vec& mu, const Vec& lambda, int k) {
    return core_contains(c_map(mu, k).shape, c_map(lambda, k).shape);
}

bool bruhat_lt(const Vec& mu, const Vec& lambda, int k) {
    Core cm = c_map(mu, k), cl = c_map(lambda, k);
    return core_contains(cm.shape, cl.shape) && cm.shape != cl.shape;
}

bool strong_cover(const Core& tau, const Core& kappa, int k) {
    if (tau.r != k + 1 || kappa.r != k + 1)
        throw std::domain_error("strong_cover: cores must avoid hook k+1");
    return vec_degree(p_map(tau, k)) + 1 == vec_degree(p_map(kappa, k)) &&
           core_contains(tau.shape, kappa.shape);
}

std::vector<Vec> bruhat_lower_set(const Vec& lambda, int ell, int k, bool strict_length) {
    if (static_cast<int>(lambda.size()) != ell)
        throw std::invalid_argument("bruhat_lower_set: lambda must have length ell");
    if (!is_bounded_partition(lambda, k))
        throw std::domain_error("bruhat_lower_set: lambda is not in P_ell^k");
    const int budget = vec_degree(lambda);
    std::vector<Vec> out;
    long long visited = 0;
    Vec cur(ell, 0);
    std::function<void(int, int, int)> gen = [&](int pos, int maxval, int used) {
        if (++visited > 5'000'000) throw resource_error("bruhat_lower_set: enumeration cap exceeded");
        if (pos == ell) {
            if (strict_length && cur.back() == 0) return;
            if (bruhat_leq(cur, lambda, k)) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= maxval && used + v <= budget; ++v) {
            cur[pos] = v;
            gen(pos + 1, v, used + v);
        }
        cur[pos] = 0;
    };
    gen(0, k, 0);
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
        int da = vec_degree(a), db = vec_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

HExpansion closed_sum(const Vec& lambda, int ell, int k, bool strict_length) {
    HExpansion out;
    for (const Vec& mu : bruhat_lower_set(lambda, ell, k, strict_length)) out += gkk_cached(mu, k);
    return out;
}

namespace {
std::string inst(const Vec& v, int k) { return "lambda=" + vec_to_string(v) + " k=" + std::to_string(k); }
}  // namespace

IdentityRecord theorem_4_5(const Vec& lambda, int ell, int k, bool strict_length) {
    IdentityRecord rec;
    rec.name = "thm4.5";
    rec.instance = inst(lambda, k) + (strict_length ? " [strict-length]" : "");
    KatalanTerm base = gkk_term(lambda, k, false);
    // LHS: sum over multisets supported on the free columns; the power of L_z
    // truncates at lambda_z + ell - z, past which every term vanishes.
    std::vector<int> free = free_columns(lambda, k);
    std::vector<int> bound;
    for (int z : free) bound.push_back(lambda[z - 1] + ell - z);
    std::function<void(size_t, const Vec&)> accumulate = [&](size_t idx, const Vec& g) {
        if (idx == free.size()) {
            rec.lhs += evaluate_cached(KatalanTerm(base.ideal, base.multiset, g));
            return;
        }
        Vec cur = g;
        for (int n = 0; n <= bound[idx]; ++n) {
            accumulate(idx + 1, cur);
            cur = add_epsilon(cur, free[idx], -1);
        }
    };
    accumulate(0, lambda);
    rec.rhs = closed_sum(lambda, ell, k, strict_length);
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

IdentityRecord theorem_1_2(const Vec& lambda, int ell, int k) {
    IdentityRecord rec;
    rec.name = "thm1.2";
    rec.instance = inst(lambda, k);
    rec.lhs = closed_gkk(lambda, k);
    rec.rhs = one_minus_g1_perp(closed_sum(lambda, ell, k));
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

IdentityRecord closed_downs_identity(const Vec& lambda, int k) {
    IdentityRecord rec;
    rec.name = "closed-downs";
    rec.instance = inst(lambda, k);
    rec.lhs = closed_gkk(lambda, k);
    rec.rhs = closed_gkk_via_downs(lambda, k);
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

IdentityRecord g1perp_lowering_identity(const Vec& lambda, int k) {
    IdentityRecord rec;
    rec.name = "g1perp-lowering";
    rec.instance = inst(lambda, k);
    const int ell = static_cast<int>(lambda.size());
    rec.lhs = one_minus_g1_perp(gkk_cached(lambda, k));
    KatalanTerm base = gkk_term(lambda, k, false);
    for (size_t mask = 0; mask < (1ull << ell); ++mask) {
        Vec g = lambda;
        int sign = 1;
        for (int z = 1; z <= ell; ++z)
            if (mask & (1ull << (z - 1))) {
                g = add_epsilon(g, z, -1);
                sign = -sign;
            }
        rec.rhs += evaluate_cached(KatalanTerm(base.ideal, base.multiset, std::move(g))).scaled(sign);
    }
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

IdentityRecord lemma_4_2(const Vec& lambda, int k, int z) {
    IdentityRecord rec;
    rec.name = "lemma4.2";
    rec.instance = inst(lambda, k) + " z=" + std::to_string(z);
    if (!is_bounded_partition(lambda, k))
        throw std::domain_error("lemma_4_2: lambda is not in P_ell^k");
    Vec mu = add_epsilon(lambda, z, -1);
    if (!is_extended_member(mu, k)) {
        rec.applicable = false;
        rec.note = "mu outside the extended set";
        return rec;
    }
    CoverData cd = h_value(mu, k, z);
    if (!cd.defined) {
        rec.applicable = false;
        rec.note = "h undefined";
        return rec;
    }
    Vec cov = cover(mu, k, z, cd.h);
    if (!is_bounded_partition(cov, k)) {
        rec.applicable = false;
        rec.note = "cover_z(mu) is not in P_ell^k";
        return rec;
    }
    rec.equal = strong_cover(c_map(cov, k), c_map(lambda, k), k);
    rec.note = "cover=" + vec_to_string(cov);
    return rec;
}

IdentityRecord lemma_4_3(const Vec& lambda, int k, int z, int i) {
    IdentityRecord rec;
    rec.name = "lemma4.3";
    rec.instance = inst(lambda, k) + " z=" + std::to_string(z) + " i=" + std::to_string(i);
    const int ell = static_cast<int>(lambda.size());
    if (z < 1 || z > ell || i < 0 || z + i > ell)
        throw std::invalid_argument("lemma_4_3: interval outside [1, ell]");
    Vec low = add_epsilon_interval(lambda, z, z + i, -1);
    if (!is_bounded_partition(low, k)) {
        rec.applicable = false;
        rec.note = "lowered vector left P_ell^k";
        return rec;
    }
    rec.equal = bruhat_lt(low, lambda, k);
    return rec;
}

IdentityRecord prop_4_4(const Vec& lambda, int k, int z) {
    IdentityRecord rec;
    rec.name = "prop4.4";
    rec.instance = inst(lambda, k) + " z=" + std::to_string(z);
    rec.equal = true;
    int skipped = 0;
    for (const Vec& nu : omega(lambda, k, z).elems) {
        if (!is_partition_vec(nu)) {
            ++skipped;  // vanishing-tail element; carries no Bruhat meaning
            continue;
        }
        if (!bruhat_lt(nu, lambda, k)) {
            rec.equal = false;
            rec.note = "nu=" + vec_to_string(nu) + " is not strictly below lambda";
            return rec;
        }
    }
    if (skipped) rec.note = std::to_string(skipped) + " non-partition element(s) skipped";
    return rec;
}

}  // namespace katalan
