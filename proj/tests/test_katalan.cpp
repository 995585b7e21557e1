#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "katalan/json_io.hpp"
#include "katalan/katalan_term.hpp"
#include "katalan/verify.hpp"

using namespace katalan;

namespace {

HExpansion H(std::initializer_list<std::pair<Vec, Int>> terms) {
    HExpansion f;
    for (auto& [p, c] : terms) f.add_term(p, c);
    return f;
}

KatalanTerm example_2_3() {
    RootIdeal psi = RootIdeal::from_start_cols(4, {3, 4, 5, 5});
    return KatalanTerm(psi, IndexMultiset::from_elements(4, {2, 3, 4, 4}), {3, 2, 1, 3});
}

}  // namespace

TEST_CASE("evaluation basics") {
    // no operators, single factor with r = 0
    KatalanTerm t(RootIdeal(1), IndexMultiset(1), {3});
    CHECK(evaluate(t) == HExpansion::h(3));
    CHECK(gkk({1}, 1) == HExpansion::h(1));
    // Delta^1((1,1)) = {(1,2)}, Delta^2((1,1)) = {}
    CHECK(RootIdeal::delta_k({1, 1}, 1) == RootIdeal::from_start_cols(2, {2, 3}));
    CHECK(RootIdeal::delta_k({1, 1}, 2).roots().empty());
    CHECK(gkk({1, 1}, 1) == H({{{1, 1}, 1}, {{1}, 1}}));
}

TEST_CASE("series oracle basics") {
    // empty ideal: the oracle returns g_gamma itself
    KatalanTerm t(RootIdeal(3), IndexMultiset(3), {2, 1, 1});
    CHECK(evaluate_series_oracle(t) == g_gamma_det({2, 1, 1}));
    // ell = 2 with the full ideal: sum over raisings with g-vanishing tail
    KatalanTerm u(RootIdeal::from_start_cols(2, {2, 3}), IndexMultiset(2), {1, 1});
    CHECK(evaluate_series_oracle(u) == g_gamma_det({1, 1}) + g_gamma_det({2, 0}));
    CHECK_THROWS_AS(evaluate_series_oracle(KatalanTerm(RootIdeal(6), IndexMultiset(6), Vec(6, 0))),
                    std::invalid_argument);
}

TEST_CASE("dual-route agreement on random instances") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 80; ++trial) {
        int ell = 1 + static_cast<int>(rng() % 4);
        KatalanTerm t = random_term(rng, ell, 6);
        CHECK(evaluate(t) == evaluate_series_oracle(t));
    }
    // the full oracle scale
    for (int trial = 0; trial < 25; ++trial) {
        KatalanTerm t = random_term(rng, 5, 7);
        CHECK(evaluate(t) == evaluate_series_oracle(t));
    }
}

TEST_CASE("lemma2.6 sweep at full strength") {
    SweepConfig cfg;
    cfg.random_instances = 200;  // per sub-lemma
    cfg.rng_seed = 26;
    SweepOutcome out = run_verify("lemma2.6", cfg);
    CHECK(out.failures == 0);
    CHECK(out.instances == 800);
}

TEST_CASE("lemma2.6 rewrites preserve evaluation") {
    std::mt19937_64 rng(55);
    int done[4] = {0, 0, 0, 0};
    while (done[0] < 25 || done[1] < 25 || done[2] < 25 || done[3] < 25) {
        int ell = 2 + static_cast<int>(rng() % 3);
        KatalanTerm t = random_term(rng, ell, 5);
        HExpansion base = evaluate(t);
        auto rem = t.ideal.removable_roots();
        if (!rem.empty() && done[0] < 25) {
            CHECK(base == evaluate(recurrence_removable(t, rem[rng() % rem.size()])));
            ++done[0];
        }
        auto add = t.ideal.addable_roots();
        if (!add.empty() && done[1] < 25) {
            CHECK(base == evaluate(recurrence_addable(t, add[rng() % add.size()])));
            ++done[1];
        }
        auto elems = t.multiset.elements();
        if (!elems.empty() && done[2] < 25) {
            CHECK(base == evaluate(recurrence_multiset_remove(t, elems[rng() % elems.size()])));
            ++done[2];
        }
        if (done[3] < 25) {
            int m = 1 + static_cast<int>(rng() % ell);
            KCombination c = recurrence_multiset_add(t, m);
            CHECK(base == evaluate(c));
            // (d) then (c) with the same m round-trips
            KCombination back = recurrence_multiset_remove(c.terms[0].second, m);
            CHECK(evaluate(c.terms[0].second) == evaluate(back));
            ++done[3];
        }
    }
}

TEST_CASE("recurrence preconditions name the failed condition") {
    KatalanTerm t(RootIdeal(2), IndexMultiset(2), {1, 1});
    CHECK_THROWS_WITH_AS(recurrence_removable(t, {1, 2}), doctest::Contains("not removable"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(recurrence_multiset_remove(t, 1), doctest::Contains("not in the multiset"),
                         std::invalid_argument);
}

TEST_CASE("lowering is a pure gamma shift") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        int ell = 1 + static_cast<int>(rng() % 4);
        KatalanTerm t = random_term(rng, ell, 5);
        int z = 1 + static_cast<int>(rng() % ell);
        KatalanTerm low = lower(t, z);
        CHECK(low.gamma == add_epsilon(t.gamma, z, -1));
        CHECK(low.ideal == t.ideal);
        CHECK(evaluate(low) == evaluate(KatalanTerm(t.ideal, t.multiset, add_epsilon(t.gamma, z, -1))));
        CHECK(lower_comb(t, ell + 1).terms.empty());
    }
}

TEST_CASE("powers of L vanish past the entry bound") {
    // L_z^n g = 0 once n > gamma_z + ell - z
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 20; ++trial) {
        int ell = 1 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % 3);
        auto lams = all_bounded_partitions(ell, k);
        Vec lam = lams[rng() % lams.size()];
        int z = 1 + static_cast<int>(rng() % ell);
        KatalanTerm t = gkk_term(lam, k, false);
        int bound = lam[z - 1] + ell - z;
        CHECK(evaluate(lower_power(t, z, bound + 1)).is_zero());
    }
}

TEST_CASE("mirror lemma hypotheses and branches") {
    std::mt19937_64 rng(91);
    auto zero_or_shift = generate_mirror_28_instances(rng, 30);
    REQUIRE(zero_or_shift.size() == 30);
    for (auto& mi : zero_or_shift) {
        MirrorCaseResult r = mirror_case(mi.term, mi.y, mi.z);
        REQUIRE(r.hypotheses.satisfied);
        if (r.outcome == MirrorOutcome::Zero) {
            CHECK(evaluate(mi.term).is_zero());
        } else {
            REQUIRE(r.outcome == MirrorOutcome::Shift);
            CHECK(evaluate(mi.term) ==
                  evaluate(KatalanTerm(mi.term.ideal, mi.term.multiset,
                                       add_epsilon(mi.term.gamma, r.shift_index, -1))));
        }
    }
    auto straightenable = generate_mirror_29_instances(rng, 30);
    REQUIRE(straightenable.size() == 30);
    for (auto& mi : straightenable) {
        MirrorStraightenResult r = mirror_straighten(mi.term, mi.y, mi.z);
        REQUIRE(r.applicable);
        CHECK(evaluate(mi.term) == evaluate(r.decomposition));
    }
    // unmet hypotheses report the clause instead of failing
    KatalanTerm flat(RootIdeal(3), IndexMultiset(3), {1, 1, 1});
    CHECK(mirror_case(flat, 1, 2).outcome == MirrorOutcome::NotApplicable);
    CHECK(!mirror_straighten(flat, 1, 2).applicable);
}

TEST_CASE("closed gkk routes agree") {
    for (int ell = 1; ell <= 3; ++ell)
        for (int k = 1; k <= 2; ++k)
            for (const Vec& lam : all_bounded_partitions(ell, k)) {
                HExpansion direct = closed_gkk(lam, k);
                CHECK(direct == closed_gkk_via_downs(lam, k));
                if (RootIdeal::delta_k(lam, k).roots().empty())
                    CHECK(direct == gkk(lam, k));
            }
}

TEST_CASE("gkk degenerates to the dual Grothendieck at large k") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        int ell = 1 + static_cast<int>(rng() % 3);
        Vec lam(ell);
        int prev = 3;
        for (int i = 0; i < ell; ++i) prev = lam[i] = static_cast<int>(rng() % (prev + 1));
        int k = std::max(1, vec_degree(lam));
        CHECK(gkk(lam, k) == g_gamma_det(lam));
        HExpansion jt = jacobi_trudi(lam);
        if (!jt.is_zero()) CHECK(gkk(lam, k).top_degree_component() == jt);
    }
}

TEST_CASE("gkk top component is Schur positive on the small sweep") {
    for (int ell = 1; ell <= 3; ++ell)
        for (int k = 1; k <= 3; ++k)
            for (const Vec& lam : all_bounded_partitions(ell, k)) {
                HExpansion top = gkk_cached(lam, k).top_degree_component();
                if (top.is_zero()) continue;
                for (auto& [mu, c] : schur_expand_homogeneous(top)) CHECK(c >= 0);
            }
}

TEST_CASE("membership errors") {
    CHECK_THROWS_AS(gkk({2, 1}, 1, false), std::domain_error);
    CHECK_THROWS_AS(closed_gkk({1, 3, 0}, 3), std::domain_error);
    CHECK(gkk({1, 2}, 2, true) == gkk({1, 2}, 2));  // extended member accepted when generalized
}

TEST_CASE("grid rendering of Example 2.3") {
    std::string grid = render_grid(example_2_3());
    const char* expected =
        "    *  *  *\n"
        "          *\n"
        " 3     #  #\n"
        "    2     #\n"
        "       1\n"
        "          3\n";
    CHECK(grid == expected);
    CHECK(render_grid(example_2_3()) == grid);  // byte-identical across runs

    KatalanTerm diag(RootIdeal(2), IndexMultiset(2), {4, -1});
    CHECK(render_grid(diag) == " 4\n   -1\n");
}

TEST_CASE("json shapes") {
    KatalanTerm t = example_2_3();
    json j = to_json(t);
    CHECK(j["ideal"]["ell"] == 4);
    CHECK(j["ideal"]["start_col"][2].is_null());
    CHECK(j["multiset"]["4"] == 2);
    CHECK(j["gamma"] == json::array({3, 2, 1, 3}));
    json f = to_json(H({{{2, 1}, 3}, {{1}, -1}}));
    CHECK(f.dump() == R"([{"partition":[1],"coeff":-1},{"partition":[2,1],"coeff":3}])");
}
