// Acceptance suite: runs every criterion at its stated scale and tolerance
// (all identities are exact), printing one pass/fail line per criterion.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>

#include "katalan/verify.hpp"

using namespace katalan;

namespace {

int g_failures = 0;

struct Criterion {
    const char* id;
    double limit_seconds;  // 0 = no stated bound
    std::function<bool(std::string&)> run;
};

void run_criterion(const Criterion& c) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("runtime bound exceeded");
    }
    if (!ok) ++g_failures;
    std::printf("criterion %-28s %s  (%.1fs)%s%s\n", c.id, ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
}

const Vec kRunning{5, 4, 4, 3, 3, 2, 2, 2, 2, 1};
constexpr int kK = 6;

bool sweep_ok(const std::string& id, const SweepConfig& cfg, std::string& detail) {
    SweepOutcome out = run_verify(id, cfg);
    detail += out.summary() + "; ";
    return out.ok();
}

HExpansion lowered_gkk(const Vec& lam, int k, const std::vector<int>& lowers) {
    KatalanTerm t = gkk_term(lam, k, false);
    Vec g = t.gamma;
    for (int w : lowers) {
        if (w > t.ell()) return HExpansion::zero();
        g = add_epsilon(g, w, -1);
    }
    return evaluate_cached(KatalanTerm(t.ideal, t.multiset, std::move(g)));
}

bool criterion_1(std::string& detail) {
    OmegaSet o8 = omega(kRunning, kK, 8);
    const std::set<Vec> expected{{5, 5, 4, 3, 3, 2, 2, 1, 1, 1}, {5, 4, 4, 3, 3, 2, 2, 1, 1, 1}};
    if (o8.elems != expected) {
        detail = "omega(lambda, 8) mismatch";
        return false;
    }
    HExpansion lhs = lowered_gkk(kRunning, kK, {8});
    HExpansion rhs;
    for (const Vec& nu : expected) rhs += gkk_cached(nu, kK);
    if (lhs != rhs) {
        detail = "L_8 g_lambda != sum over omega";
        return false;
    }
    detail = "omega and the two-term evaluation match at z=8";
    return true;
}

bool criterion_2(std::string& detail) {
    OmegaSet o4 = omega(kRunning, kK, 4);
    const Vec A{5, 5, 4, 2, 2, 2, 2, 2, 2, 1};
    const Vec B{5, 4, 4, 2, 2, 2, 2, 2, 2, 1};
    if (o4.elems != std::set<Vec>{A, B}) {
        detail = "omega(lambda, 4) mismatch";
        return false;
    }
    // L_4 g = (1 - L_10)(g_A + g_B) + L_8 g
    HExpansion lhs = lowered_gkk(kRunning, kK, {4});
    HExpansion rhs67 = gkk_cached(A, kK) + gkk_cached(B, kK) - lowered_gkk(A, kK, {10}) -
                       lowered_gkk(B, kK, {10}) + lowered_gkk(kRunning, kK, {8});
    if (lhs != rhs67) {
        detail = "operator-dressed two-term form failed";
        return false;
    }
    // fully straightened six-term expansion with subscripts as an exact multiset
    std::vector<std::pair<Int, Vec>> six = {
        {1, A},
        {1, B},
        {-1, {5, 5, 4, 2, 2, 2, 2, 2, 2, 0}},
        {-1, {5, 4, 4, 2, 2, 2, 2, 2, 2, 0}},
        {1, {5, 5, 4, 3, 3, 2, 2, 1, 1, 1}},
        {1, {5, 4, 4, 3, 3, 2, 2, 1, 1, 1}},
    };
    HExpansion rhs;
    for (auto& [c, nu] : six) rhs += gkk_cached(nu, kK).scaled(c);
    if (lhs != rhs) {
        detail = "six-term expansion failed";
        return false;
    }
    detail = "dressed two-term form and six-term expansion are coefficient-exact";
    return true;
}

bool criterion_3(std::string& detail) {
    SweepConfig cfg;
    cfg.max_ell = 4;
    cfg.random_instances = 200;
    cfg.rng_seed = 2024;
    return sweep_ok("dualroute", cfg, detail);
}

bool criterion_4(std::string& detail) {
    long long checked = 0;
    std::function<bool(Vec&, int, int)> walk = [&](Vec& cur, int maxpart, int left) -> bool {
        if (!cur.empty()) {
            ++checked;
            if (g_gamma_det(cur) != g_gamma_raising(cur)) {
                detail = "det/raising mismatch at " + vec_to_string(cur);
                return false;
            }
            HExpansion jt = jacobi_trudi(cur);
            HExpansion g = g_gamma_det(cur);
            if (jt.is_zero() ? !g.is_zero() : g.top_degree_component() != jt) {
                detail = "top-degree mismatch at " + vec_to_string(cur);
                return false;
            }
        }
        if (static_cast<int>(cur.size()) == 4) return true;
        for (int p = std::min(maxpart, left); p >= 0; --p) {
            cur.push_back(p);
            if (!walk(cur, p == 0 ? 0 : p, left - p)) return false;
            cur.pop_back();
        }
        return true;
    };
    Vec cur;
    if (!walk(cur, 8, 8)) return false;
    detail = std::to_string(checked) + " vectors, zero mismatches";
    return true;
}

bool criterion_5(std::string& detail) {
    SweepConfig cfg;
    cfg.max_ell = 4;
    cfg.random_instances = 50;
    cfg.rng_seed = 5;
    bool ok = sweep_ok("lemma2.6", cfg, detail);
    ok = sweep_ok("mirror2.8", cfg, detail) && ok;
    ok = sweep_ok("mirror2.9", cfg, detail) && ok;
    return ok;
}

bool criterion_6(std::string& detail) {
    SweepConfig cfg;
    cfg.max_ell = 4;
    cfg.max_k = 3;
    cfg.max_n = 2;
    bool ok = sweep_ok("thm3.8", cfg, detail);
    ok = sweep_ok("thm3.15", cfg, detail) && ok;
    ok = sweep_ok("thm3.18", cfg, detail) && ok;
    ok = sweep_ok("cor3.21", cfg, detail) && ok;
    ok = sweep_ok("prop3.3", cfg, detail) && ok;
    ok = sweep_ok("prop3.9", cfg, detail) && ok;
    ok = sweep_ok("prop3.10", cfg, detail) && ok;
    return ok;
}

bool criterion_7(std::string& detail) {
    // the ell = k = 1 balance instance: h_1 + 1
    HExpansion balance = closed_sum({1}, 1, 1);
    HExpansion expected = HExpansion::h(1);
    expected.add_term({}, 1);
    if (balance != expected) {
        detail = "ell=1 balance instance failed";
        return false;
    }
    SweepConfig cfg;
    cfg.max_ell = 4;
    cfg.max_k = 3;
    return sweep_ok("thm4.5", cfg, detail);
}

bool criterion_8(std::string& detail) {
    SweepConfig cfg;
    cfg.max_ell = 4;
    cfg.max_k = 3;
    return sweep_ok("thm1.2", cfg, detail);  // plus the two standalone closed-form identities
}

bool criterion_9(std::string& detail) {
    SweepConfig cfg;
    cfg.max_ell = 4;
    cfg.random_instances = 100;
    cfg.rng_seed = 9;
    return sweep_ok("lemma4.7", cfg, detail);
}

bool criterion_10(std::string& detail) {
    SweepConfig cfg;
    cfg.max_ell = 4;
    cfg.max_k = 4;
    bool ok = sweep_ok("bijection", cfg, detail);
    SweepConfig cfg2;
    cfg2.max_ell = 4;
    cfg2.max_k = 3;
    ok = sweep_ok("lemma4.2", cfg2, detail) && ok;
    ok = sweep_ok("prop4.4", cfg2, detail) && ok;
    return ok;
}

bool criterion_11(std::string& detail) {
    RootIdeal psi = RootIdeal::from_start_cols(4, {3, 4, 5, 5});
    KatalanTerm t(psi, IndexMultiset::from_elements(4, {2, 3, 4, 4}), {3, 2, 1, 3});
    const std::string expected =
        "    *  *  *\n"
        "          *\n"
        " 3     #  #\n"
        "    2     #\n"
        "       1\n"
        "          3\n";
    std::string first = render_grid(t);
    std::string second = render_grid(t);
    if (first != expected || first != second) {
        detail = "grid rendering drifted";
        return false;
    }
    detail = "byte-identical rendering";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 (worked example, z=8)", 60, criterion_1},
        {"2 (worked example, z=4)", 0, criterion_2},
        {"3 (dual-route evaluation)", 0, criterion_3},
        {"4 (g routes + Jacobi-Trudi)", 120, criterion_4},
        {"5 (lemma2.6 + mirrors)", 0, criterion_5},
        {"6 (straightening sweeps)", 600, criterion_6},
        {"7 (thm4.5 summation)", 0, criterion_7},
        {"8 (thm1.2 + closed forms)", 0, criterion_8},
        {"9 (lemma4.7 e-perp)", 0, criterion_9},
        {"10 (core bijections)", 0, criterion_10},
        {"11 (grid golden file)", 0, criterion_11},
    };
    for (const Criterion& c : criteria) run_criterion(c);
    if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return g_failures == 0 ? 0 : 1;
}
