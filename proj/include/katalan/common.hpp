#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace katalan {

using Int = long long;
using Vec = std::vector<int>;

// A computation refused because it would exceed a configured bound
// (degree cap, enumeration cap). CLI maps this to exit code 3.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violated internal consistency condition: something the library
// guarantees by construction failed to hold. Always a bug, never user error.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

// C(n, k) with C(n, 0) = 1 for any n (so C(-1, 0) = 1 as needed by k_0^(r)).
inline Int binomial(Int n, Int k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < k) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

// Total degree guard for symmetric-function computations.  Exceeding the cap
// raises resource_error instead of letting memory grow without bound.
int degree_cap();
void set_degree_cap(int cap);

inline void check_degree_cap(int degree, const char* where) {
    if (degree > degree_cap())
        throw resource_error(std::string(where) + ": total degree " + std::to_string(degree) +
                             " exceeds cap " + std::to_string(degree_cap()));
}

struct VecHash {
    size_t operator()(const Vec& v) const {
        size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
        for (int x : v) {
            h ^= static_cast<size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::string vec_to_string(const Vec& v);

}  // namespace katalan
