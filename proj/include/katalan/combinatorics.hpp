#pragma once

#include <map>

#include "katalan/common.hpp"

namespace katalan {

// ---- integer vectors and partitions -------------------------------------
//
// A GammaVector is a plain Vec of fixed length ell; a Partition is a Vec
// that is weakly decreasing with strictly positive parts (canonical form).
// Bounded partitions keep their length-ell zero-padded form.

bool is_weakly_decreasing(const Vec& v);

// weakly decreasing, all entries >= 0 (zero padding allowed)
bool is_partition_vec(const Vec& v);

// entries in [0, k], weakly decreasing; the zero-padded P_ell^k convention
bool is_bounded_partition(const Vec& v, int k);

// membership in the extended set: v_i <= k and v_i + ell - i weakly decreasing
bool is_extended_member(const Vec& v, int k);

int vec_degree(const Vec& v);          // sum of entries
int positive_degree(const Vec& v);     // sum of positive entries

Vec strip_trailing_zeros(Vec v);
Vec pad_to(Vec v, int ell);

// v +- epsilon_z (z is 1-based); throws std::invalid_argument out of range
Vec add_epsilon(Vec v, int z, int sign);
// v +- epsilon_[a,b] (inclusive 1-based interval)
Vec add_epsilon_interval(Vec v, int a, int b, int sign);

// ---- multisets on [ell] ---------------------------------------------------

class IndexMultiset {
public:
    explicit IndexMultiset(int ell) : ell_(ell) {
        if (ell < 0) throw std::invalid_argument("IndexMultiset: negative length");
    }
    static IndexMultiset from_elements(int ell, const std::vector<int>& elems);
    // {z}^n
    static IndexMultiset power(int ell, int z, int n);

    int ell() const { return ell_; }
    int count(int a) const;
    int size() const;
    bool empty() const { return counts_.empty(); }

    void add(int a, int n = 1);
    void remove_one(int a);  // throws std::invalid_argument if count(a) == 0

    IndexMultiset with(int a) const;     // M | | a
    IndexMultiset without(int a) const;  // M \ a (one copy)

    const std::map<int, int>& counts() const { return counts_; }
    std::vector<int> elements() const;  // expanded, ascending

    bool operator==(const IndexMultiset& o) const {
        return ell_ == o.ell_ && counts_ == o.counts_;
    }
    bool operator!=(const IndexMultiset& o) const { return !(*this == o); }
    bool operator<(const IndexMultiset& o) const {
        if (ell_ != o.ell_) return ell_ < o.ell_;
        return counts_ < o.counts_;
    }

private:
    int ell_;
    std::map<int, int> counts_;  // index -> positive count
};

}  // namespace katalan
