#pragma once

#include <map>
#include <unordered_map>

#include "katalan/combinatorics.hpp"

namespace katalan {

// Canonical term order of the h-basis: by degree, then lexicographic on the
// part vectors.  This is also the serialization order (bit-exact format).
struct PartitionLess {
    bool operator()(const Vec& a, const Vec& b) const {
        int da = vec_degree(a), db = vec_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse integer combination of complete-homogeneous monomials h_lambda,
// keyed by canonical partitions (weakly decreasing positive parts; the empty
// partition is the constant term).  All arithmetic is exact and checked.
class HExpansion {
public:
    using Terms = std::map<Vec, Int, PartitionLess>;

    HExpansion() = default;
    static HExpansion zero() { return {}; }
    static HExpansion one();
    static HExpansion h(int m);  // h_m; h_0 = 1, h_{m<0} = 0
    static HExpansion monomial(Vec partition, Int coeff);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Int coeff(const Vec& partition) const;
    int degree() const;  // max term degree; -1 for the zero expansion
    HExpansion top_degree_component() const;

    void add_term(Vec partition, Int c);
    HExpansion& operator+=(const HExpansion& o);
    HExpansion& operator-=(const HExpansion& o);
    HExpansion operator+(const HExpansion& o) const;
    HExpansion operator-(const HExpansion& o) const;
    HExpansion operator*(const HExpansion& o) const;
    HExpansion operator-() const;
    HExpansion scaled(Int c) const;

    bool operator==(const HExpansion& o) const { return terms_ == o.terms_; }
    bool operator!=(const HExpansion& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Terms terms_;
};

// Inhomogeneous complete homogeneous function k_m^(r) = sum_i C(r+i-1, i) h_{m-i},
// with k_m^(0) = h_m and k_m^(r) = 0 for m < 0.
HExpansion k_inhom(int m, int r);

// k_gamma = k_{gamma_1}^(0) ... k_{gamma_ell}^(ell-1); zero if any entry < 0.
HExpansion k_monomial(const Vec& gamma);

// det(h_{gamma_i + j - i}): the classical top-degree oracle.
HExpansion jacobi_trudi(const Vec& gamma);

// g_gamma = det(k_{gamma_i+j-i}^(i-1)), cofactor expansion with minor memoization.
HExpansion g_gamma_det(const Vec& gamma);

// g_gamma via prod_{i<j} (1 - R_ij) k_gamma; must agree with g_gamma_det.
HExpansion g_gamma_raising(const Vec& gamma);

// e_d-perp action on the h-basis: on h_{l_1}...h_{l_n} the sum over size-d
// subsets of positions, each selected part lowered by one (h_0 = 1).
HExpansion e_perp(int d, const HExpansion& f);

// (1 - G_1-perp) f = sum_d (-1)^d e_perp(d, f); finite because e_d-perp kills
// monomials with fewer than d parts.
HExpansion one_minus_g1_perp(const HExpansion& f);

// Sparse integer combination of k-monomials k_mu over Z^ell; the workspace in
// which lowering/raising operators act as exponent translations.
class KMonomialSum {
public:
    using Terms = std::unordered_map<Vec, Int, VecHash>;

    explicit KMonomialSum(int ell) : ell_(ell) {}
    static KMonomialSum single(Vec gamma);

    int ell() const { return ell_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Vec& v, Int c);
    // f -> (1 - R_ij) f  /  f -> (1 - L_z) f
    void apply_one_minus_raising(int i, int j);
    void apply_one_minus_lowering(int z);
    // drop vectors with a negative entry at a position no remaining factor can
    // raise; raisable[x-1] marks positions some later R factor still raises
    void prune(const std::vector<char>& raisable);

    HExpansion to_h() const;

private:
    int ell_;
    Terms terms_;
};

// Dominance order on partitions of equal degree (prefix-sum comparison).
bool dominance_leq(const Vec& a, const Vec& b);

// Expand a homogeneous h-combination in the Schur basis by repeated
// Jacobi-Trudi subtraction; returns (partition, coefficient) pairs.
std::map<Vec, Int, PartitionLess> schur_expand_homogeneous(const HExpansion& f);

}  // namespace katalan
