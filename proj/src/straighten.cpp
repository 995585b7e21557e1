#include "katalan/straighten.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace katalan {

namespace {

std::string instance_str(const Vec& v, int k, int z) {
    return "v=" + vec_to_string(v) + " k=" + std::to_string(k) + " z=" + std::to_string(z);
}

void require_ptilde(const Vec& v, int k, const char* where) {
    if (!is_extended_member(v, k))
        throw std::domain_error(std::string(where) + ": " + vec_to_string(v) +
                                " is not an extended member for k=" + std::to_string(k));
}

// gamma-slot lowering of a generalized K-k-Schur term; lowers above ell kill it
HExpansion eval_gterm(const GTerm& t, int k) {
    const int ell = static_cast<int>(t.nu.size());
    Vec g = t.nu;
    for (int w : t.lowers) {
        if (w > ell) return HExpansion::zero();
        g = add_epsilon(g, w, -1);
    }
    KatalanTerm base = gkk_term(t.nu, k, true);
    return evaluate_cached(KatalanTerm(base.ideal, base.multiset, std::move(g))).scaled(t.coeff);
}

}  // namespace

HExpansion evaluate_gcomb(const GCombination& comb, int k) {
    HExpansion out;
    for (const GTerm& t : comb) out += eval_gterm(t, k);
    return out;
}

GCombination one_minus_lower(GCombination comb, int w) {
    GCombination out;
    out.reserve(comb.size() * 2);
    for (GTerm& t : comb) {
        GTerm lowered = t;
        lowered.coeff = checked_mul(lowered.coeff, -1);
        lowered.lowers.push_back(w);
        out.push_back(std::move(t));
        out.push_back(std::move(lowered));
    }
    return out;
}

int equal_run(const Vec& v, int z) {
    const int ell = static_cast<int>(v.size());
    if (z < 1 || z > ell) throw std::invalid_argument("equal_run: index outside [1, ell]");
    int h = 0;
    while (z + h + 1 <= ell && v[z + h] == v[z - 1]) ++h;
    return h;
}

CoverData h_value(const Vec& mu, int k, int z) {
    require_ptilde(mu, k, "h_value");
    const int ell = static_cast<int>(mu.size());
    if (z < 1 || z > ell) throw std::invalid_argument("h_value: index outside [1, ell]");
    RootIdeal psi = RootIdeal::delta_k(mu, k);
    CoverData cd;
    cd.y = psi.top(z);
    if (z == ell || mu[z - 1] >= mu[z]) return cd;  // h = 0 by convention
    if (psi.top(z) <= psi.top(z + 1)) {
        cd.defined = false;  // no chain height exists in this sub-case
        return cd;
    }
    const int y = cd.y;
    // uppath of z: z = u_0, u_1 = up(z), ..., u_C = y
    std::vector<int> ups;
    for (int v = z; v != y;) {
        auto u = psi.up(v);
        if (!u) throw internal_error("h_value: broken uppath of z");
        ups.push_back(*u);
        v = *u;
    }
    const int C = static_cast<int>(ups.size());

    auto chain_holds = [&](int h) -> bool {
        if (z + h > ell) return false;
        for (int j = 1; j <= h; ++j)
            if (mu[z - 1] + 1 != mu[z + j - 1]) return false;
        // parallel up-chains of z, z+1, ..., z+h must all exist, stay aligned
        // with the rows y, y+1, ..., y+h, and carry equal mu values per level
        std::vector<int> cur(h + 1);
        for (int j = 0; j <= h; ++j) cur[j] = z + j;
        for (int c = 1; c <= C; ++c) {
            for (int j = 0; j <= h; ++j) {
                auto u = psi.up(cur[j]);
                if (!u) return false;
                cur[j] = *u;
            }
            for (int j = 1; j <= h; ++j)
                if (mu[cur[0] - 1] != mu[cur[j] - 1]) return false;
        }
        for (int j = 0; j <= h; ++j)
            if (cur[j] != y + j) return false;
        // final chain row: up(y+1), ..., up(y+h)
        int prev = 0;
        for (int j = 1; j <= h; ++j) {
            auto u = psi.up(y + j);
            if (!u) return false;
            if (j > 1 && mu[prev - 1] != mu[*u - 1]) return false;
            prev = *u;
        }
        return true;
    };

    int h = 0;
    for (int cand = 1; cand <= ell - z; ++cand) {
        if (chain_holds(cand)) h = cand;
        else break;
    }
    if (h == 0) {
        // top(z) > top(z+1) but no h in [ell - z] satisfies the chain
        cd.defined = false;
        return cd;
    }
    cd.h = h;
    cd.intervals.push_back({z, z + h});
    std::vector<int> cur(h + 1);
    for (int j = 0; j <= h; ++j) cur[j] = z + j;
    for (int c = 1; c <= C; ++c) {
        for (int j = 0; j <= h; ++j) cur[j] = *psi.up(cur[j]);
        cd.intervals.push_back({cur[0], cur[h]});
    }
    for (int j = 1; j <= h; ++j) cd.uppath_targets.push_back(*psi.up(y + j));
    cd.intervals.push_back({cd.uppath_targets.front(), cd.uppath_targets.back()});
    return cd;
}

Vec cover(const Vec& mu, int k, int z, int i) {
    CoverData cd = h_value(mu, k, z);
    if (!cd.defined)
        throw std::invalid_argument("cover: h is undefined for " + instance_str(mu, k, z));
    if (i < 0 || i > cd.h)
        throw std::invalid_argument("cover: i=" + std::to_string(i) + " outside [0," + std::to_string(cd.h) +
                                    "] for " + instance_str(mu, k, z));
    if (i == 0) return mu;
    Vec out = add_epsilon_interval(mu, cd.uppath_targets[0], cd.uppath_targets[i - 1], +1);
    out = add_epsilon_interval(out, z + 1, z + i, -1);
    if (!is_extended_member(out, k))
        throw internal_error("cover: output " + vec_to_string(out) + " left the extended set for " +
                             instance_str(mu, k, z));
    return out;
}

Vec cover_full(const Vec& mu, int k, int z) { return cover(mu, k, z, h_value(mu, k, z).h); }

StraightenResult straighten_step(const Vec& mu, int k, int z) {
    require_ptilde(mu, k, "straighten_step");
    const int ell = static_cast<int>(mu.size());
    if (z < 1 || z >= ell)
        throw std::invalid_argument("straighten_step: z outside [1, ell-1]");
    if (mu[z - 1] + 1 != mu[z])
        throw std::invalid_argument("straighten_step: mu_z + 1 != mu_{z+1} for " + instance_str(mu, k, z));
    for (int x = 1; x < ell; ++x)
        if (x != z && mu[x - 1] < mu[x])
            throw std::invalid_argument("straighten_step: mu ascends at x=" + std::to_string(x) +
                                        " as well; z is not the only ascent");
    RootIdeal psi = RootIdeal::delta_k(mu, k);
    const int b = psi.bottom();
    if (z == b)
        throw internal_error("straighten_step: z equals the bottom despite the wall at z, z+1");
    StraightenResult res;
    res.proposition = z > b ? 3 : 10;
    const int tz = psi.top(z), tz1 = psi.top(z + 1);
    if (tz == tz1) throw internal_error("straighten_step: top(z) == top(z+1), trichotomy violated");

    GCombination inner;
    if (tz > tz1) {
        res.which = StraightenCase::A;
        auto u = psi.up(tz + 1);
        if (!u) throw internal_error("straighten_step: up(y+1) undefined in case (a)");
        inner.push_back({1, add_epsilon(add_epsilon(mu, *u, +1), z + 1, -1), {}});
        inner.push_back({1, add_epsilon(mu, z + 1, -1), {}});
    } else if (tz == tz1 - 1) {
        res.which = StraightenCase::B;
        inner.push_back({1, add_epsilon(mu, z + 1, -1), {}});
    } else {
        res.which = StraightenCase::C;
        return res;  // g_mu = 0
    }
    if (res.proposition == 3) {
        res.rhs = std::move(inner);
    } else {
        auto dz1 = psi.down(z + 1);
        if (!dz1) throw internal_error("straighten_step: down(z+1) undefined for z in [b-1]");
        res.rhs = one_minus_lower(std::move(inner), *dz1 + 1);
        res.rhs.push_back({1, mu, {*dz1}});
    }
    return res;
}

IdentityRecord lower_step_bottom(const Vec& lambda, int k, int z) {
    IdentityRecord rec;
    rec.name = "prop3.9";
    rec.instance = instance_str(lambda, k, z);
    if (!is_bounded_partition(lambda, k))
        throw std::domain_error("lower_step_bottom: not a k-bounded partition");
    RootIdeal psi = RootIdeal::delta_k(lambda, k);
    if (z < 1 || z > psi.bottom())
        throw std::invalid_argument("lower_step_bottom: z outside [1, b_lambda]");
    const int dn = *psi.down(z);
    Vec mu = add_epsilon(lambda, z, -1);
    KatalanTerm lt = gkk_term(lambda, k, false);
    rec.lhs = evaluate_cached(KatalanTerm(lt.ideal, lt.multiset, mu));
    GCombination rhs = one_minus_lower({{1, mu, {}}}, dn + 1);
    rhs.push_back({1, lambda, {dn}});
    rec.rhs = evaluate_gcomb(rhs, k);
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

OmegaSet omega_d(const Vec& base, int k, int z, int d) {
    require_ptilde(base, k, "omega");
    if (!is_weakly_decreasing(base))
        throw std::domain_error("omega: base " + vec_to_string(base) + " is not weakly decreasing");
    const int ell = static_cast<int>(base.size());
    if (z < 1 || z > ell) throw std::invalid_argument("omega: z outside [1, ell]");
    OmegaSet out;
    out.h_prime = equal_run(base, z);
    if (d < 0 || d > out.h_prime)
        throw std::invalid_argument("omega: level d outside [0, h']");
    std::set<Vec> cur;
    cur.insert(add_epsilon(base, z, -1));
    for (int lev = 1; lev <= d; ++lev) {
        std::set<Vec> next;
        for (const Vec& nu : cur) {
            if (!is_extended_member(nu, k))
                throw internal_error("omega: recursion element " + vec_to_string(nu) +
                                     " left the extended set");
            RootIdeal psi = RootIdeal::delta_k(nu, k);
            const int t1 = psi.top(z + lev - 1), t2 = psi.top(z + lev);
            if (t1 == t2) throw internal_error("omega: top trichotomy violated at " + vec_to_string(nu));
            if (t1 > t2) {
                auto u = psi.up(t1 + 1);
                if (!u) throw internal_error("omega: up(y+1) undefined in case 1 at " + vec_to_string(nu));
                next.insert(add_epsilon(add_epsilon(nu, *u, +1), z + lev, -1));
                next.insert(add_epsilon(nu, z + lev, -1));
            } else if (t1 == t2 - 1) {
                next.insert(add_epsilon(nu, z + lev, -1));
            }
            // t2 - 1 > t1 contributes nothing
        }
        cur = std::move(next);
    }
    out.elems = std::move(cur);
    return out;
}

OmegaSet omega(const Vec& base, int k, int z) {
    OmegaSet out = omega_d(base, k, z, equal_run(base, z));
    for (const Vec& nu : out.elems)
        if (!is_weakly_decreasing(nu))
            throw internal_error("omega: final element " + vec_to_string(nu) + " is not weakly decreasing");
    return out;
}

std::set<Vec> omega_multiset(const Vec& base, int k, const IndexMultiset& m) {
    if (m.ell() != static_cast<int>(base.size()))
        throw std::invalid_argument("omega_multiset: multiset length mismatch");
    std::set<Vec> cur{base};
    for (int z : m.elements()) {
        std::set<Vec> next;
        for (const Vec& v : cur) {
            OmegaSet o = omega(v, k, z);
            next.insert(o.elems.begin(), o.elems.end());
        }
        cur = std::move(next);
    }
    return cur;
}

// Sequences of quadruples (z_j, Psi_j, y_j, i_j): a raise-run of length i_j
// starts at row z_j (validated through the chain height h_value of the
// current vector), and the lowering steps between runs must each sit in the
// top-comparison cases that keep the straightening alive.  Every prefix is a
// sequence; the run caps are i_j <= min(h_j, z + d - z_j).
std::set<Vec> omega_quadruple_oracle(const Vec& base, int k, int z, int d) {
    require_ptilde(base, k, "omega_quadruple_oracle");
    const int ell = static_cast<int>(base.size());
    if (z < 1 || z > ell) throw std::invalid_argument("omega_quadruple_oracle: z outside [1, ell]");
    if (d < 0 || z + d > ell) throw std::invalid_argument("omega_quadruple_oracle: bad level");
    const Vec mu = add_epsilon(base, z, -1);

    std::set<Vec> out;
    // w carries the raises of chosen quadruples and the lowerings of all
    // levels < t; level t compares tops at rows z+t-1, z+t.
    std::function<void(const Vec&, int)> dfs = [&](const Vec& w, int t) {
        if (t > d) {
            out.insert(w);
            return;
        }
        if (!is_extended_member(w, k))
            throw internal_error("omega_quadruple_oracle: sequence left the extended set at " +
                                 vec_to_string(w));
        RootIdeal psi = RootIdeal::delta_k(w, k);
        const int t1 = psi.top(z + t - 1), t2 = psi.top(z + t);
        if (t1 == t2)
            throw internal_error("omega_quadruple_oracle: top trichotomy violated at " + vec_to_string(w));
        // lowering gap step; dead when the straightening vanishes (case 3)
        if (t1 >= t2 - 1) dfs(add_epsilon(w, z + t, -1), t + 1);
        // raise-run quadruple (z_j = z + t - 1): needs the case-1 geometry
        if (t1 > t2) {
            CoverData cd = h_value(w, k, z + t - 1);
            if (cd.defined && cd.h >= 1) {
                const int imax = std::min(cd.h, d - t + 1);
                for (int ij = 1; ij <= imax; ++ij) {
                    Vec w2 = add_epsilon_interval(w, cd.uppath_targets[0], cd.uppath_targets[ij - 1], +1);
                    w2 = add_epsilon_interval(w2, z + t, z + t + ij - 1, -1);
                    dfs(w2, t + ij);
                }
            }
        }
    };
    dfs(mu, 1);
    return out;
}

IdentityRecord theorem_3_8(const Vec& lambda, int k, int z) {
    IdentityRecord rec;
    rec.name = "thm3.8";
    rec.instance = instance_str(lambda, k, z);
    if (!is_bounded_partition(lambda, k))
        throw std::domain_error("theorem_3_8: not a k-bounded partition");
    RootIdeal psi = RootIdeal::delta_k(lambda, k);
    if (z <= psi.bottom()) {
        rec.applicable = false;
        rec.note = "z <= b_lambda; covered by thm3.15";
        return rec;
    }
    KatalanTerm lt = gkk_term(lambda, k, false);
    rec.lhs = evaluate_cached(KatalanTerm(lt.ideal, lt.multiset, add_epsilon(lambda, z, -1)));
    for (const Vec& nu : omega(lambda, k, z).elems) rec.rhs += evaluate_gcomb({{1, nu, {}}}, k);
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

IdentityRecord theorem_3_15(const Vec& lambda, int k, int z) {
    IdentityRecord rec;
    rec.name = "thm3.15";
    rec.instance = instance_str(lambda, k, z);
    if (!is_bounded_partition(lambda, k))
        throw std::domain_error("theorem_3_15: not a k-bounded partition");
    RootIdeal psi = RootIdeal::delta_k(lambda, k);
    if (z < 1 || z > psi.bottom()) {
        rec.applicable = false;
        rec.note = "z > b_lambda; covered by thm3.8";
        return rec;
    }
    const int dn = *psi.down(z);
    const int hp = equal_run(lambda, z);
    KatalanTerm lt = gkk_term(lambda, k, false);
    rec.lhs = evaluate_cached(KatalanTerm(lt.ideal, lt.multiset, add_epsilon(lambda, z, -1)));
    GCombination rhs;
    for (const Vec& nu : omega(lambda, k, z).elems) {
        GCombination part = one_minus_lower({{1, nu, {}}}, dn + hp + 1);
        rhs.insert(rhs.end(), part.begin(), part.end());
    }
    rhs.push_back({1, lambda, {dn}});
    rec.rhs = evaluate_gcomb(rhs, k);
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

IdentityRecord theorem_3_18(const Vec& lambda, int k, int z, int n) {
    IdentityRecord rec;
    rec.name = "thm3.18";
    rec.instance = instance_str(lambda, k, z) + " n=" + std::to_string(n);
    if (!is_bounded_partition(lambda, k))
        throw std::domain_error("theorem_3_18: not a k-bounded partition");
    if (n < 1) throw std::invalid_argument("theorem_3_18: n must be >= 1");
    RootIdeal psi = RootIdeal::delta_k(lambda, k);
    KatalanTerm lt = gkk_term(lambda, k, false);
    Vec low = lambda;
    for (int i = 0; i < n; ++i) low = add_epsilon(low, z, -1);
    rec.lhs = evaluate_cached(KatalanTerm(lt.ideal, lt.multiset, std::move(low)));
    if (z > psi.bottom()) {
        rec.note = "part (a)";
        for (const Vec& nu : omega_multiset(lambda, k, IndexMultiset::power(lt.ell(), z, n)))
            rec.rhs += evaluate_gcomb({{1, nu, {}}}, k);
    } else {
        rec.note = "part (b)";
        const int dn = *psi.down(z);
        const int hp = equal_run(lambda, z);
        GCombination rhs;
        for (const Vec& nu : omega(lambda, k, z).elems) {
            for (int i = 0; i + 1 <= n; ++i) {
                const int j = n - 1 - i;
                GTerm t{1, nu, {}};
                t.lowers.insert(t.lowers.end(), i, z);
                t.lowers.insert(t.lowers.end(), j, dn);
                GCombination part = one_minus_lower({std::move(t)}, dn + hp + 1);
                rhs.insert(rhs.end(), part.begin(), part.end());
            }
        }
        GTerm last{1, lambda, {}};
        last.lowers.insert(last.lowers.end(), n, dn);
        rhs.push_back(std::move(last));
        rec.rhs = evaluate_gcomb(rhs, k);
    }
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

IdentityRecord corollary_3_21(const Vec& lambda, int k, int z, int n) {
    IdentityRecord rec;
    rec.name = "cor3.21";
    rec.instance = instance_str(lambda, k, z) + " n=" + std::to_string(n);
    if (!is_bounded_partition(lambda, k))
        throw std::domain_error("corollary_3_21: not a k-bounded partition");
    if (n < 1) throw std::invalid_argument("corollary_3_21: n must be >= 1");
    RootIdeal psi = RootIdeal::delta_k(lambda, k);
    if (z < 1 || z > psi.bottom()) {
        rec.applicable = false;
        rec.note = "z > b_lambda";
        return rec;
    }
    const int ell = static_cast<int>(lambda.size());
    const int dn = *psi.down(z);
    const int hp = equal_run(lambda, z);
    const int zp = dn + hp + 1;
    OmegaSet om = omega(lambda, k, z);
    int m = 0;
    if (zp <= ell) {
        m = std::max(m, lambda[zp - 1] + ell - zp);
        for (const Vec& nu : om.elems) m = std::max(m, nu[zp - 1] + ell - zp);
    }
    KatalanTerm lt = gkk_term(lambda, k, false);
    auto eval_lambda_lowered = [&](const std::vector<int>& lowers) {
        Vec g = lambda;
        for (int w : lowers) {
            if (w > ell) return HExpansion::zero();
            g = add_epsilon(g, w, -1);
        }
        return evaluate_cached(KatalanTerm(lt.ideal, lt.multiset, std::move(g)));
    };
    // LHS: sum_{i=0}^m L_{z'}^i L_z^n g_lambda
    for (int i = 0; i <= (zp <= ell ? m : 0); ++i) {
        std::vector<int> lowers(n, z);
        lowers.insert(lowers.end(), i, zp);
        rec.lhs += eval_lambda_lowered(lowers);
    }
    // RHS: sum_nu sum_{i+j=n-1} L_z^i L_dn^j g_nu + sum_{i=0}^m L_{z'}^i L_dn^n g_lambda
    GCombination rhs;
    for (const Vec& nu : om.elems) {
        for (int i = 0; i + 1 <= n; ++i) {
            GTerm t{1, nu, {}};
            t.lowers.insert(t.lowers.end(), i, z);
            t.lowers.insert(t.lowers.end(), n - 1 - i, dn);
            rhs.push_back(std::move(t));
        }
    }
    rec.rhs = evaluate_gcomb(rhs, k);
    for (int i = 0; i <= (zp <= ell ? m : 0); ++i) {
        std::vector<int> lowers(n, dn);
        lowers.insert(lowers.end(), i, zp);
        rec.rhs += eval_lambda_lowered(lowers);
    }
    // vanishing bound check: one more z'-power kills every involved term
    if (zp <= ell) {
        std::vector<int> lowers(static_cast<size_t>(m) + 1, zp);
        if (!eval_lambda_lowered(lowers).is_zero()) {
            rec.equal = false;
            rec.note = "vanishing bound failed for g_lambda";
            return rec;
        }
        for (const Vec& nu : om.elems) {
            GTerm t{1, nu, std::vector<int>(static_cast<size_t>(m) + 1, zp)};
            if (!evaluate_gcomb({t}, k).is_zero()) {
                rec.equal = false;
                rec.note = "vanishing bound failed for an omega element";
                return rec;
            }
        }
    }
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

IdentityRecord lemma_3_6(const Vec& mu, int k, int z) {
    IdentityRecord rec;
    rec.name = "lemma3.6";
    rec.instance = instance_str(mu, k, z);
    require_ptilde(mu, k, "lemma_3_6");
    const int ell = static_cast<int>(mu.size());
    RootIdeal psi = RootIdeal::delta_k(mu, k);
    if (z <= psi.bottom() || z > ell) {
        rec.applicable = false;
        rec.note = "z outside [b_mu + 1, ell]";
        return rec;
    }
    for (int x = 1; x < ell; ++x)
        if (x != z && mu[x - 1] < mu[x]) {
            rec.applicable = false;
            rec.note = "mu has an ascent away from z";
            return rec;
        }
    if (z < ell && psi.top(z) <= psi.top(z + 1)) {
        rec.applicable = false;
        rec.note = "top(z) <= top(z+1)";
        return rec;
    }
    CoverData cd = h_value(mu, k, z);
    if (!cd.defined) {
        rec.applicable = false;
        rec.note = "h undefined";
        return rec;
    }
    rec.lhs = evaluate_gcomb({{1, mu, {}}}, k);
    GCombination rhs{{1, cover(mu, k, z, cd.h), {}}};
    for (int i = 0; i <= cd.h - 1; ++i)
        rhs.push_back({1, add_epsilon(cover(mu, k, z, i), z + i + 1, -1), {}});
    rec.rhs = evaluate_gcomb(rhs, k);
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

IdentityRecord lemma_3_7(const Vec& mu, int k, int z) {
    IdentityRecord rec = lemma_3_6(mu, k, z);
    rec.name = "lemma3.7";
    if (!rec.applicable) return rec;
    const int ell = static_cast<int>(mu.size());
    CoverData cd = h_value(mu, k, z);
    Vec cov = cover(mu, k, z, cd.h);
    if (z + cd.h + 1 > ell || cov[z + cd.h - 1] + 1 != cov[z + cd.h]) {
        rec.applicable = false;
        rec.note = "extra hypothesis (cover)_{z+h} + 1 = (cover)_{z+h+1} fails";
        return rec;
    }
    HExpansion gc = evaluate_gcomb({{1, cov, {}}}, k);
    HExpansion shifted = evaluate_gcomb({{1, cov, {z + cd.h + 1}}}, k);
    const bool zero_branch = gc.is_zero();
    const bool shift_branch = gc == shifted;
    rec.lhs = gc;
    rec.rhs = zero_branch ? HExpansion::zero() : shifted;
    rec.equal = zero_branch || shift_branch;
    rec.note = zero_branch ? "vanishing disjunct" : (shift_branch ? "shift disjunct" : "neither disjunct");
    if (rec.equal) {
        RootIdeal psi = RootIdeal::delta_k(mu, k);
        auto ua = psi.up(cd.y + cd.h);
        auto ub = psi.up(cd.y + cd.h + 1);
        if (ua && ub && mu[*ua - 1] == mu[*ub - 1] && !gc.is_zero()) {
            rec.equal = false;
            rec.note = "moreover-clause: expected vanishing";
        }
    }
    return rec;
}

IdentityRecord lemma_3_13(const Vec& mu, int k, int z) {
    IdentityRecord rec;
    rec.name = "lemma3.13";
    rec.instance = instance_str(mu, k, z);
    require_ptilde(mu, k, "lemma_3_13");
    const int ell = static_cast<int>(mu.size());
    RootIdeal psi = RootIdeal::delta_k(mu, k);
    if (z < 1 || z > psi.bottom()) {
        rec.applicable = false;
        rec.note = "z outside [b_mu]";
        return rec;
    }
    for (int x = 1; x < ell; ++x)
        if (x != z && mu[x - 1] < mu[x]) {
            rec.applicable = false;
            rec.note = "mu has an ascent away from z";
            return rec;
        }
    if (z >= ell || psi.top(z) <= psi.top(z + 1)) {
        rec.applicable = false;
        rec.note = "top(z) <= top(z+1) (or z = ell)";
        return rec;
    }
    CoverData cd = h_value(mu, k, z);
    if (!cd.defined) {
        rec.applicable = false;
        rec.note = "h undefined";
        return rec;
    }
    auto dz1 = psi.down(z + 1);
    if (!dz1) {
        rec.applicable = false;
        rec.note = "down(z+1) undefined";
        return rec;
    }
    rec.lhs = evaluate_gcomb({{1, mu, {}}}, k);
    GCombination rhs = one_minus_lower({{1, cover(mu, k, z, cd.h), {}}}, *dz1 + cd.h);
    for (int i = 0; i <= cd.h - 1; ++i) {
        GCombination part =
            one_minus_lower({{1, add_epsilon(cover(mu, k, z, i), z + i + 1, -1), {}}}, *dz1 + i + 1);
        rhs.insert(rhs.end(), part.begin(), part.end());
    }
    rhs.push_back({1, mu, {*dz1}});
    rec.rhs = evaluate_gcomb(rhs, k);
    rec.equal = rec.lhs == rec.rhs;
    return rec;
}

IdentityRecord lemma_3_14(const Vec& mu, int k, int z) {
    IdentityRecord rec = lemma_3_13(mu, k, z);
    rec.name = "lemma3.14";
    if (!rec.applicable) return rec;
    const int ell = static_cast<int>(mu.size());
    RootIdeal psi = RootIdeal::delta_k(mu, k);
    CoverData cd = h_value(mu, k, z);
    Vec cov = cover(mu, k, z, cd.h);
    if (z + cd.h + 1 > ell || cov[z + cd.h - 1] + 1 != cov[z + cd.h]) {
        rec.applicable = false;
        rec.note = "extra hypothesis (cover)_{z+h} + 1 = (cover)_{z+h+1} fails";
        return rec;
    }
    const int dz1 = *psi.down(z + 1);
    HExpansion gc = evaluate_gcomb({{1, cov, {}}}, k);
    GCombination alt = one_minus_lower({{1, add_epsilon(cov, z + cd.h + 1, -1), {}}}, dz1 + cd.h + 1);
    alt.push_back({1, cov, {dz1 + cd.h}});
    HExpansion alt_eval = evaluate_gcomb(alt, k);
    const bool zero_branch = gc.is_zero();
    const bool op_branch = gc == alt_eval;
    rec.lhs = gc;
    rec.rhs = zero_branch ? HExpansion::zero() : alt_eval;
    rec.equal = zero_branch || op_branch;
    rec.note = zero_branch ? "vanishing disjunct" : (op_branch ? "operator disjunct" : "neither disjunct");
    if (rec.equal) {
        auto ua = psi.up(cd.y + cd.h);
        auto ub = psi.up(cd.y + cd.h + 1);
        if (ua && ub && mu[*ua - 1] == mu[*ub - 1] && !gc.is_zero()) {
            rec.equal = false;
            rec.note = "moreover-clause: expected vanishing";
        }
    }
    return rec;
}

IdentityRecord lemma_3_12(const Vec& lambda, const Vec& mu, int k, int z, int i) {
    IdentityRecord rec;
    rec.name = "lemma3.12";
    rec.instance = "lambda=" + vec_to_string(lambda) + " mu=" + vec_to_string(mu) + " k=" + std::to_string(k) +
                   " z=" + std::to_string(z) + " i=" + std::to_string(i);
    require_ptilde(lambda, k, "lemma_3_12");
    require_ptilde(mu, k, "lemma_3_12");
    const int ell = static_cast<int>(lambda.size());
    if (static_cast<int>(mu.size()) != ell)
        throw std::invalid_argument("lemma_3_12: length mismatch");
    RootIdeal dl = RootIdeal::delta_k(lambda, k);
    RootIdeal dm = RootIdeal::delta_k(mu, k);
    auto fail = [&](const std::string& why) {
        rec.applicable = false;
        rec.note = why;
        return rec;
    };
    if (!(z >= 1 && z <= dl.bottom() - 1)) return fail("z outside [b_lambda - 1]");
    if (!(i >= 1 && i <= ell - z - 1 && z + i <= dl.bottom())) return fail("i outside range");
    for (int x = z; x < z + i; ++x)
        if (lambda[x - 1] != lambda[x]) return fail("(a) lambda not constant on [z, z+i]");
    if (z + i < ell && lambda[z + i - 1] < lambda[z + i]) return fail("(a) lambda ascends at z+i");
    if (mu[z + i - 2] + 1 != mu[z + i - 1]) return fail("(b) mu_{z+i-1} + 1 != mu_{z+i}");
    if (z + i < ell && mu[z + i - 1] < mu[z + i]) return fail("(b) mu ascends at z+i");
    if (mu[z + i - 2] + 1 != lambda[z + i - 2]) return fail("(c) mu_{z+i-1} + 1 != lambda_{z+i-1}");
    auto d1 = dl.down(z);
    auto d2 = dm.down(z + i);
    if (!d1 || !d2) return fail("a required down is undefined");
    rec.equal = *d1 + i == *d2;
    rec.note = "down_lambda(z)=" + std::to_string(*d1) + " down_mu(z+i)=" + std::to_string(*d2);
    return rec;
}

}  // namespace katalan
