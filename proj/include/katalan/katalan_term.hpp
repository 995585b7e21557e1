#pragma once

#include <string>

#include "katalan/root_ideal.hpp"
#include "katalan/symfunc.hpp"

namespace katalan {

// The evaluatable presentation of K(Psi; M; gamma).
struct KatalanTerm {
    RootIdeal ideal;
    IndexMultiset multiset;
    Vec gamma;

    KatalanTerm(RootIdeal psi, IndexMultiset m, Vec g);
    int ell() const { return ideal.ell(); }

    bool operator==(const KatalanTerm& o) const {
        return ideal == o.ideal && multiset == o.multiset && gamma == o.gamma;
    }
    bool operator<(const KatalanTerm& o) const;
    std::string to_string() const;
};

// K(Psi; R; gamma) for a root ideal R means K(Psi; L(R); gamma).
KatalanTerm make_term(const RootIdeal& psi, const RootIdeal& r, Vec gamma);

// Formal integer combination of Katalan terms (rewrite outputs are not
// auto-simplified; term structure is preserved for trace inspection).
struct KCombination {
    std::vector<std::pair<Int, KatalanTerm>> terms;

    void add(Int c, KatalanTerm t) { terms.emplace_back(c, std::move(t)); }
};

// Expand prod_{z in M} (1 - L_z) prod_{(i,j) not in Psi} (1 - R_ij) k_gamma in
// k-monomial space and convert to the h-basis.  The authoritative route.
HExpansion evaluate(const KatalanTerm& t);
HExpansion evaluate(const KCombination& c);

// Independent oracle from the geometric-series definition
// prod (1 - L_z) prod_{(i,j) in Psi} sum_n R_ij^n g_gamma; requires ell <= 5.
HExpansion evaluate_series_oracle(const KatalanTerm& t);

// gamma -> gamma - n*epsilon_z with the ideal and multiset untouched.
KatalanTerm lower(const KatalanTerm& t, int z);
KatalanTerm lower_power(const KatalanTerm& t, int z, int n);
// L_z as a combination; the empty combination for z > ell (the L_{z>ell} = 0 convention)
KCombination lower_comb(const KatalanTerm& t, int z, int n = 1);

// Lemma-2.6 style two-term rewrites; evaluation of the output equals
// evaluation of the input (enforced by the test suites).
KCombination recurrence_removable(const KatalanTerm& t, Root beta);
KCombination recurrence_addable(const KatalanTerm& t, Root alpha);
KCombination recurrence_multiset_remove(const KatalanTerm& t, int m);
KCombination recurrence_multiset_add(const KatalanTerm& t, int m);

// Mirror Lemma hypothesis checking is literal: every clause is tested on the
// given (y, z) pair and the verdict carries the failed clause if any.
struct MirrorHypotheses {
    bool satisfied = false;
    std::string failed_clause;  // empty when satisfied
};

enum class MirrorOutcome { Zero, Shift, NotApplicable };

struct MirrorCaseResult {
    MirrorOutcome outcome = MirrorOutcome::NotApplicable;
    int shift_index = 0;  // z+1 for the shift branch
    MirrorHypotheses hypotheses;
};

MirrorHypotheses check_mirror_hypotheses(const KatalanTerm& t, int y, int z);
MirrorCaseResult mirror_case(const KatalanTerm& t, int y, int z);

struct MirrorStraightenResult {
    bool applicable = false;
    std::string failed_clause;
    KCombination decomposition;
};

MirrorHypotheses check_straighten_hypotheses(const KatalanTerm& t, int y, int z);
MirrorStraightenResult mirror_straighten(const KatalanTerm& t, int y, int z);

// K-k-Schur function K(Delta^k(v); Delta^{k+1}(v); v); accepts any extended
// member when generalized = true.
KatalanTerm gkk_term(const Vec& v, int k, bool generalized = true);
HExpansion gkk(const Vec& v, int k, bool generalized = true);

// Closed k-Schur Katalan function K(Delta^k(v); Delta^k(v); v).
HExpansion closed_gkk(const Vec& v, int k);
// Same function through prod_{m in D}(1 - L_m) g_v^{(k)}; must agree.
HExpansion closed_gkk_via_downs(const Vec& v, int k);

// The down-column set D of Delta^k(v) and its complement [ell]_v.
std::vector<int> down_columns(const Vec& v, int k);
std::vector<int> free_columns(const Vec& v, int k);

// Memoized gkk evaluation shared by the sweeps.
HExpansion gkk_cached(const Vec& v, int k);
HExpansion evaluate_cached(const KatalanTerm& t);
void clear_evaluation_caches();

// ASCII grid: '#' for ideal cells, gamma on the diagonal (right-aligned width
// 2), '*' bullet header rows above the grid (column a carries m_M(a) bullets
// stacked from the top), blank elsewhere.  Requires ell <= 30.
std::string render_grid(const KatalanTerm& t);

}  // namespace katalan
