#include "katalan/combinatorics.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>

namespace katalan {

namespace {
std::atomic<int> g_degree_cap{0};

int initial_degree_cap() {
    if (const char* env = std::getenv("KATALAN_DEGREE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 40;
}
}  // namespace

int degree_cap() {
    int v = g_degree_cap.load(std::memory_order_relaxed);
    if (v == 0) {
        v = initial_degree_cap();
        g_degree_cap.store(v, std::memory_order_relaxed);
    }
    return v;
}

void set_degree_cap(int cap) {
    if (cap <= 0) throw std::invalid_argument("degree cap must be positive");
    g_degree_cap.store(cap, std::memory_order_relaxed);
}

std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

bool is_weakly_decreasing(const Vec& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

bool is_partition_vec(const Vec& v) {
    if (!is_weakly_decreasing(v)) return false;
    return v.empty() || v.back() >= 0;
}

bool is_bounded_partition(const Vec& v, int k) {
    if (!is_partition_vec(v)) return false;
    return v.empty() || v.front() <= k;
}

bool is_extended_member(const Vec& v, int k) {
    const int ell = static_cast<int>(v.size());
    for (int i = 1; i <= ell; ++i) {
        if (v[i - 1] > k) return false;
        if (i > 1 && v[i - 2] + 1 < v[i - 1]) return false;  // v_{i-1} + (ell-i+1) >= v_i + (ell-i)
    }
    return true;
}

int vec_degree(const Vec& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

int positive_degree(const Vec& v) {
    int s = 0;
    for (int x : v)
        if (x > 0) s += x;
    return s;
}

Vec strip_trailing_zeros(Vec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

Vec pad_to(Vec v, int ell) {
    if (static_cast<int>(v.size()) > ell)
        throw std::invalid_argument("pad_to: vector longer than requested length");
    v.resize(ell, 0);
    return v;
}

Vec add_epsilon(Vec v, int z, int sign) {
    if (z < 1 || z > static_cast<int>(v.size()))
        throw std::invalid_argument("add_epsilon: index " + std::to_string(z) + " outside [1," +
                                    std::to_string(v.size()) + "]");
    v[z - 1] += sign;
    return v;
}

Vec add_epsilon_interval(Vec v, int a, int b, int sign) {
    if (a < 1 || b > static_cast<int>(v.size()) || a > b)
        throw std::invalid_argument("add_epsilon_interval: bad interval [" + std::to_string(a) + "," +
                                    std::to_string(b) + "] for length " + std::to_string(v.size()));
    for (int z = a; z <= b; ++z) v[z - 1] += sign;
    return v;
}

IndexMultiset IndexMultiset::from_elements(int ell, const std::vector<int>& elems) {
    IndexMultiset m(ell);
    for (int a : elems) m.add(a);
    return m;
}

IndexMultiset IndexMultiset::power(int ell, int z, int n) {
    IndexMultiset m(ell);
    if (n < 0) throw std::invalid_argument("IndexMultiset::power: negative exponent");
    if (n > 0) m.add(z, n);
    return m;
}

int IndexMultiset::count(int a) const {
    auto it = counts_.find(a);
    return it == counts_.end() ? 0 : it->second;
}

int IndexMultiset::size() const {
    int s = 0;
    for (auto& [a, n] : counts_) s += n;
    return s;
}

void IndexMultiset::add(int a, int n) {
    if (a < 1 || a > ell_)
        throw std::invalid_argument("IndexMultiset::add: index " + std::to_string(a) + " outside [1," +
                                    std::to_string(ell_) + "]");
    if (n < 0) throw std::invalid_argument("IndexMultiset::add: negative count");
    if (n == 0) return;
    counts_[a] += n;
}

void IndexMultiset::remove_one(int a) {
    auto it = counts_.find(a);
    if (it == counts_.end())
        throw std::invalid_argument("IndexMultiset::remove_one: element " + std::to_string(a) + " absent");
    if (--it->second == 0) counts_.erase(it);
}

IndexMultiset IndexMultiset::with(int a) const {
    IndexMultiset m = *this;
    m.add(a);
    return m;
}

IndexMultiset IndexMultiset::without(int a) const {
    IndexMultiset m = *this;
    m.remove_one(a);
    return m;
}

std::vector<int> IndexMultiset::elements() const {
    std::vector<int> out;
    for (auto& [a, n] : counts_)
        for (int i = 0; i < n; ++i) out.push_back(a);
    return out;
}

}  // namespace katalan
