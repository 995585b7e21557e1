#include "katalan/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace katalan {

HExpansion HExpansion::one() {
    HExpansion f;
    f.terms_[{}] = 1;
    return f;
}

HExpansion HExpansion::h(int m) {
    HExpansion f;
    if (m < 0) return f;
    if (m == 0) return one();
    f.terms_[{m}] = 1;
    return f;
}

HExpansion HExpansion::monomial(Vec partition, Int coeff) {
    if (!is_partition_vec(partition) || (!partition.empty() && partition.back() == 0))
        throw std::invalid_argument("HExpansion::monomial: " + vec_to_string(partition) +
                                    " is not a canonical partition");
    HExpansion f;
    if (coeff != 0) f.terms_[std::move(partition)] = coeff;
    return f;
}

Int HExpansion::coeff(const Vec& partition) const {
    auto it = terms_.find(partition);
    return it == terms_.end() ? 0 : it->second;
}

int HExpansion::degree() const {
    if (terms_.empty()) return -1;
    return vec_degree(terms_.rbegin()->first);  // term order is degree-major
}

HExpansion HExpansion::top_degree_component() const {
    HExpansion f;
    const int d = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend() && vec_degree(it->first) == d; ++it)
        f.terms_[it->first] = it->second;
    return f;
}

void HExpansion::add_term(Vec partition, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(partition), c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

HExpansion& HExpansion::operator+=(const HExpansion& o) {
    for (auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

HExpansion& HExpansion::operator-=(const HExpansion& o) {
    for (auto& [p, c] : o.terms_) add_term(p, checked_mul(c, -1));
    return *this;
}

HExpansion HExpansion::operator+(const HExpansion& o) const {
    HExpansion f = *this;
    f += o;
    return f;
}

HExpansion HExpansion::operator-(const HExpansion& o) const {
    HExpansion f = *this;
    f -= o;
    return f;
}

HExpansion HExpansion::operator-() const { return scaled(-1); }

HExpansion HExpansion::scaled(Int c) const {
    HExpansion f;
    if (c == 0) return f;
    for (auto& [p, x] : terms_) f.terms_[p] = checked_mul(x, c);
    return f;
}

namespace {
Vec merge_parts(const Vec& a, const Vec& b) {
    Vec out(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin(), std::greater<int>());
    return out;
}
}  // namespace

HExpansion HExpansion::operator*(const HExpansion& o) const {
    HExpansion f;
    for (auto& [p, c] : terms_)
        for (auto& [q, d] : o.terms_) f.add_term(merge_parts(p, q), checked_mul(c, d));
    return f;
}

std::string HExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = c >= 0 ? c : -c;
        if (a != 1 || p.empty()) os << a;
        if (!p.empty()) {
            if (a != 1) os << "*";
            os << "h" << vec_to_string(p);
        }
    }
    return os.str();
}

HExpansion k_inhom(int m, int r) {
    if (r < 0) throw std::invalid_argument("k_inhom: negative superscript");
    if (m < 0) return HExpansion::zero();
    static std::map<std::pair<int, int>, HExpansion> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    HExpansion f;
    for (int i = 0; i <= m; ++i) {
        Int c = binomial(static_cast<Int>(r) + i - 1, i);
        if (c != 0) f += HExpansion::h(m - i).scaled(c);
    }
    cache.emplace(key, f);
    return f;
}

HExpansion k_monomial(const Vec& gamma) {
    check_degree_cap(positive_degree(gamma), "k_monomial");
    for (int x : gamma)
        if (x < 0) return HExpansion::zero();
    HExpansion f = HExpansion::one();
    for (size_t i = 0; i < gamma.size(); ++i) f = f * k_inhom(gamma[i], static_cast<int>(i));
    return f;
}

namespace {

// Cofactor expansion over the rows of an ell x ell matrix of ring elements,
// memoized on the surviving column set (rows are consumed top-down).
HExpansion ring_det(int ell, const std::function<HExpansion(int, int)>& entry) {
    if (ell == 0) return HExpansion::one();
    if (ell > 20) throw resource_error("ring determinant: dimension too large");
    std::unordered_map<uint32_t, HExpansion> memo;
    std::function<HExpansion(int, uint32_t)> minor = [&](int i, uint32_t cols) -> HExpansion {
        if (i > ell) return HExpansion::one();
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        HExpansion det;
        int sign = 1;
        for (int j = 1; j <= ell; ++j) {
            uint32_t bit = 1u << (j - 1);
            if (!(cols & bit)) continue;
            HExpansion e = entry(i, j);
            if (!e.is_zero()) {
                HExpansion sub = minor(i + 1, cols & ~bit);
                det += (e * sub).scaled(sign);
            }
            sign = -sign;
        }
        memo.emplace(cols, det);
        return det;
    };
    return minor(1, (1u << ell) - 1);
}

}  // namespace

HExpansion jacobi_trudi(const Vec& gamma) {
    check_degree_cap(positive_degree(gamma), "jacobi_trudi");
    const int ell = static_cast<int>(gamma.size());
    return ring_det(ell, [&](int i, int j) { return HExpansion::h(gamma[i - 1] + j - i); });
}

HExpansion g_gamma_det(const Vec& gamma) {
    check_degree_cap(positive_degree(gamma), "g_gamma_det");
    const int ell = static_cast<int>(gamma.size());
    return ring_det(ell, [&](int i, int j) { return k_inhom(gamma[i - 1] + j - i, i - 1); });
}

HExpansion g_gamma_raising(const Vec& gamma) {
    check_degree_cap(positive_degree(gamma), "g_gamma_raising");
    const int ell = static_cast<int>(gamma.size());
    KMonomialSum f = KMonomialSum::single(gamma);
    // column-major factor order; positions are raisable until their row's last factor
    std::vector<std::pair<int, int>> factors;
    for (int j = 2; j <= ell; ++j)
        for (int i = j - 1; i >= 1; --i) factors.push_back({i, j});
    std::vector<std::vector<char>> raisable_after(factors.size() + 1, std::vector<char>(ell, 0));
    for (int t = static_cast<int>(factors.size()) - 1; t >= 0; --t) {
        raisable_after[t] = raisable_after[t + 1];
        raisable_after[t][factors[t].first - 1] = 1;
    }
    for (size_t t = 0; t < factors.size(); ++t) {
        f.apply_one_minus_raising(factors[t].first, factors[t].second);
        f.prune(raisable_after[t + 1]);
    }
    return f.to_h();
}

HExpansion e_perp(int d, const HExpansion& f) {
    if (d < 0) throw std::invalid_argument("e_perp: negative d");
    if (d == 0) return f;
    HExpansion out;
    for (auto& [parts, c] : f.terms()) {
        if (static_cast<int>(parts.size()) < d) continue;
        // group equal parts and distribute the d lowerings among the groups
        std::vector<std::pair<int, int>> groups;  // (part value, multiplicity)
        for (int p : parts) {
            if (!groups.empty() && groups.back().first == p) ++groups.back().second;
            else groups.push_back({p, 1});
        }
        std::function<void(size_t, int, Int, Vec)> rec = [&](size_t g, int left, Int mult, Vec acc) {
            if (g == groups.size()) {
                if (left == 0) {
                    std::sort(acc.begin(), acc.end(), std::greater<int>());
                    while (!acc.empty() && acc.back() == 0) acc.pop_back();
                    out.add_term(std::move(acc), checked_mul(c, mult));
                }
                return;
            }
            auto [val, count] = groups[g];
            for (int take = 0; take <= std::min(count, left); ++take) {
                Vec acc2 = acc;
                for (int i = 0; i < count - take; ++i) acc2.push_back(val);
                for (int i = 0; i < take; ++i) acc2.push_back(val - 1);
                rec(g + 1, left - take, checked_mul(mult, binomial(count, take)), std::move(acc2));
            }
        };
        rec(0, d, 1, {});
    }
    return out;
}

HExpansion one_minus_g1_perp(const HExpansion& f) {
    int max_parts = 0;
    for (auto& [p, c] : f.terms()) max_parts = std::max(max_parts, static_cast<int>(p.size()));
    HExpansion out;
    for (int d = 0; d <= max_parts; ++d) {
        HExpansion e = e_perp(d, f);
        if (d % 2 == 0) out += e;
        else out -= e;
    }
    return out;
}

KMonomialSum KMonomialSum::single(Vec gamma) {
    KMonomialSum f(static_cast<int>(gamma.size()));
    f.terms_[std::move(gamma)] = 1;
    return f;
}

void KMonomialSum::add_term(const Vec& v, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(v, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void KMonomialSum::apply_one_minus_raising(int i, int j) {
    if (i < 1 || j > ell_ || i >= j)
        throw std::invalid_argument("apply_one_minus_raising: bad root");
    Terms shifted;
    shifted.reserve(terms_.size());
    for (auto& [v, c] : terms_) {
        Vec w = v;
        ++w[i - 1];
        --w[j - 1];
        shifted.emplace(std::move(w), c);
    }
    for (auto& [w, c] : shifted) add_term(w, checked_mul(c, -1));
}

void KMonomialSum::apply_one_minus_lowering(int z) {
    if (z < 1 || z > ell_) throw std::invalid_argument("apply_one_minus_lowering: bad index");
    Terms shifted;
    shifted.reserve(terms_.size());
    for (auto& [v, c] : terms_) {
        Vec w = v;
        --w[z - 1];
        shifted.emplace(std::move(w), c);
    }
    for (auto& [w, c] : shifted) add_term(w, checked_mul(c, -1));
}

void KMonomialSum::prune(const std::vector<char>& raisable) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        bool dead = false;
        const Vec& v = it->first;
        for (int x = 0; x < ell_; ++x) {
            if (v[x] < 0 && !raisable[x]) {
                dead = true;
                break;
            }
        }
        it = dead ? terms_.erase(it) : std::next(it);
    }
}

HExpansion KMonomialSum::to_h() const {
    // Consume positions from the back, expanding k_{v_t}^(t-1) and merging
    // states that share (remaining prefix, accumulated partition).  Keys pack
    // the prefix, a separator, and the partition into one vector.
    struct State {};
    Terms cur;
    for (auto& [v, c] : terms_) {
        bool neg = false;
        for (int x : v) neg = neg || x < 0;
        if (neg) continue;  // k-monomial with a negative entry is zero
        Vec key = v;
        key.push_back(-1);  // separator: prefix | partition
        cur.emplace(std::move(key), c);
    }
    for (int t = ell_; t >= 1; --t) {
        Terms next;
        next.reserve(cur.size());
        const int r = t - 1;
        for (auto& [key, c] : cur) {
            // key = prefix (t entries), -1, parts...
            const int m = key[t - 1];
            Vec base(key.begin(), key.begin() + (t - 1));
            base.push_back(-1);
            Vec parts(key.begin() + t + 1, key.end());
            for (int i = 0; i <= m; ++i) {
                Int bc = binomial(static_cast<Int>(r) + i - 1, i);
                if (bc == 0) continue;
                Vec key2 = base;
                if (m - i > 0) {
                    Vec p2 = parts;
                    p2.insert(std::upper_bound(p2.begin(), p2.end(), m - i, std::greater<int>()), m - i);
                    key2.insert(key2.end(), p2.begin(), p2.end());
                } else {
                    key2.insert(key2.end(), parts.begin(), parts.end());
                }
                Int c2 = checked_mul(c, bc);
                auto [it, inserted] = next.try_emplace(std::move(key2), c2);
                if (!inserted) {
                    it->second = checked_add(it->second, c2);
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        cur = std::move(next);
    }
    HExpansion out;
    for (auto& [key, c] : cur) {
        // key = -1, parts...
        out.add_term(Vec(key.begin() + 1, key.end()), c);
    }
    return out;
}

bool dominance_leq(const Vec& a, const Vec& b) {
    if (vec_degree(a) != vec_degree(b))
        throw std::invalid_argument("dominance_leq: partitions of different degree");
    int sa = 0, sb = 0;
    const size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

std::map<Vec, Int, PartitionLess> schur_expand_homogeneous(const HExpansion& f) {
    if (!f.is_zero()) {
        const int d = f.degree();
        for (auto& [p, c] : f.terms())
            if (vec_degree(p) != d)
                throw std::invalid_argument("schur_expand_homogeneous: input is not homogeneous");
    }
    std::map<Vec, Int, PartitionLess> out;
    HExpansion rest = f;
    int guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 200000) throw internal_error("schur_expand_homogeneous: no convergence");
        // a dominance-minimal support partition: its s-coefficient equals its h-coefficient
        const Vec* mu = nullptr;
        for (auto& [p, c] : rest.terms()) {
            bool minimal = true;
            for (auto& [q, cq] : rest.terms()) {
                if (q != p && dominance_leq(q, p)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                mu = &p;
                break;
            }
        }
        if (!mu) throw internal_error("schur_expand_homogeneous: no dominance-minimal term");
        Vec mu_copy = *mu;
        Int c = rest.coeff(mu_copy);
        out[mu_copy] = c;
        rest -= jacobi_trudi(mu_copy).scaled(c);
        if (rest.coeff(mu_copy) != 0)
            throw internal_error("schur_expand_homogeneous: subtraction failed to clear the minimal term");
    }
    return out;
}

}  // namespace katalan
