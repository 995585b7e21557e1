#pragma once

#include <set>

#include "katalan/katalan_term.hpp"

namespace katalan {

// A term c * (prod_w L_w) g_nu^{(k)} over generalized K-k-Schur functions;
// any lowering index > ell annihilates the term.
struct GTerm {
    Int coeff;
    Vec nu;
    std::vector<int> lowers;
};

using GCombination = std::vector<GTerm>;

HExpansion evaluate_gcomb(const GCombination& comb, int k);
// (1 - L_w) applied formally to every term of a combination
GCombination one_minus_lower(GCombination comb, int w);

// Chain-height data of a straightening step: the maximal h, the anchor
// y = top(z), the
// per-row intervals of the chain, and the raised rows up(y+1..y+h).
struct CoverData {
    bool defined = true;  // false in the mu_z < mu_{z+1}, top(z) <= top(z+1) sub-case
    int h = 0;
    int y = 0;
    std::vector<std::pair<int, int>> intervals;
    std::vector<int> uppath_targets;
};

CoverData h_value(const Vec& mu, int k, int z);

// cover_{z,i}(mu) = mu + eps_[up(y+1), up(y+i)] - eps_[z+1, z+i]; i in [0, h].
Vec cover(const Vec& mu, int k, int z, int i);
Vec cover_full(const Vec& mu, int k, int z);  // i = h

// One straightening step at the unique ascent z (Propositions 3.3 / 3.10),
// classified by the top trichotomy.
enum class StraightenCase { A, B, C };

struct StraightenResult {
    int proposition;  // 3 for z in [b+1, ell-1], 10 for z in [b-1]
    StraightenCase which;
    GCombination rhs;  // empty for case C (the function vanishes)
};

StraightenResult straighten_step(const Vec& mu, int k, int z);

// Evaluated two-sided identity; `applicable` is false when the hypotheses of
// the statement are not met by the instance.
struct IdentityRecord {
    std::string name;
    std::string instance;
    HExpansion lhs;
    HExpansion rhs;
    bool equal = false;
    bool applicable = true;
    std::string note;
};

// prop3.9 record: L_z g = (1 - L_{down(z)+1}) g_{lambda - eps_z} + L_{down(z)} g.
IdentityRecord lower_step_bottom(const Vec& lambda, int k, int z);

// The straightening index sets.  Elements are kept verbatim (vanishing
// generalized functions are not pruned); the recursion is the primary route.
struct OmegaSet {
    std::set<Vec> elems;
    int h_prime = 0;
};

OmegaSet omega(const Vec& base, int k, int z);
OmegaSet omega_d(const Vec& base, int k, int z, int d);
std::set<Vec> omega_multiset(const Vec& base, int k, const IndexMultiset& m);

// Declarative quadruple-sequence enumeration; the small-scale oracle that the
// recursion is checked against.
std::set<Vec> omega_quadruple_oracle(const Vec& base, int k, int z, int d);

IdentityRecord theorem_3_8(const Vec& lambda, int k, int z);
IdentityRecord theorem_3_15(const Vec& lambda, int k, int z);
IdentityRecord theorem_3_18(const Vec& lambda, int k, int z, int n);
IdentityRecord corollary_3_21(const Vec& lambda, int k, int z, int n);

IdentityRecord lemma_3_6(const Vec& mu, int k, int z);
IdentityRecord lemma_3_7(const Vec& mu, int k, int z);
IdentityRecord lemma_3_13(const Vec& mu, int k, int z);
IdentityRecord lemma_3_14(const Vec& mu, int k, int z);

// Lemma-3.12 index identity (no evaluations involved).
IdentityRecord lemma_3_12(const Vec& lambda, const Vec& mu, int k, int z, int i);

// h' of the equal run lambda_z = ... = lambda_{z+h'} (> lambda_{z+h'+1}).
int equal_run(const Vec& v, int z);

}  // namespace katalan
