#pragma once

#include "katalan/straighten.hpp"

namespace katalan {

// (k+1)-core carrier of the Bruhat order; shape is a canonical partition.
struct Core {
    Vec shape;
    int r;  // the avoided hook length

    bool operator==(const Core& o) const { return shape == o.shape && r == o.r; }
};

// hook(i, j) = arm + leg + 1 for each cell of the diagram
std::vector<std::vector<int>> hook_lengths(const Vec& p);
bool is_r_core(const Vec& p, int r);

// Hook-count bijection: row i of the image counts the cells of kappa's row i
// with hook length <= k.
Vec p_map(const Core& kappa, int k);
// Inverse, built row-by-row from the bottom, skipping columns that would
// close a hook of k+1; certified by the p_map round trip.
Core c_map(const Vec& lambda, int k);

// Bruhat order on the affine Grassmannian elements via core containment.
bool core_contains(const Vec& inner, const Vec& outer);
bool bruhat_leq(const Vec& mu, const Vec& lambda, int k);
bool bruhat_lt(const Vec& mu, const Vec& lambda, int k);

// tau => kappa: containment with the bounded-partition degree rising by one.
bool strong_cover(const Core& tau, const Core& kappa, int k);

// All zero-padded mu in P_ell^k with w_mu <= w_lambda, sorted by degree then
// lex.  strict_length restricts to exactly ell positive parts (falsification
// variant of the padding convention).
std::vector<Vec> bruhat_lower_set(const Vec& lambda, int ell, int k, bool strict_length = false);

// Sum of g_mu^{(k)} over the Bruhat lower set.
HExpansion closed_sum(const Vec& lambda, int ell, int k, bool strict_length = false);

// Identity records for the Bruhat-summation results.
IdentityRecord theorem_4_5(const Vec& lambda, int ell, int k, bool strict_length = false);
IdentityRecord theorem_1_2(const Vec& lambda, int ell, int k);
IdentityRecord closed_downs_identity(const Vec& lambda, int k);
IdentityRecord g1perp_lowering_identity(const Vec& lambda, int k);
IdentityRecord lemma_4_2(const Vec& lambda, int k, int z);
IdentityRecord lemma_4_3(const Vec& lambda, int k, int z, int i);
IdentityRecord prop_4_4(const Vec& lambda, int k, int z);

}  // namespace katalan
