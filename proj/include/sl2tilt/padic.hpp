#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2tilt {

using Int = std::int64_t;

inline bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_prime(Int p) {
    if (!is_prime(p))
        throw std::invalid_argument("base must be prime, got " + std::to_string(p));
}

/// Base-p digit expansion, least significant digit first.
/// Canonical form: no trailing zeros; zero is the empty sequence.
struct Digits {
    Int base;
    std::vector<Int> digits;

    Int at(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }

    Int value() const {
        Int v = 0, pw = 1;
        for (Int d : digits) {
            v += d * pw;
            pw *= base;
        }
        return v;
    }
};

inline Digits digits(Int p, Int n) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("digits: n must be nonnegative");
    Digits d{p, {}};
    while (n > 0) {
        d.digits.push_back(n % p);
        n /= p;
    }
    return d;
}

/// Index of the highest nonzero base-p digit; -1 for n = 0.
inline Int len_p(Int p, Int n) {
    return static_cast<Int>(digits(p, n).digits.size()) - 1;
}

/// The primitive (rHat, sHat) of a pair (r, s) together with the truncated
/// part epsilon = r - rHat = s - sHat and the index m of the highest
/// differing digit.  For r = s we take (0, 0, r, -1).
struct PrimitivePair {
    Int r_hat;
    Int s_hat;
    Int epsilon;
    Int m;
};

inline PrimitivePair primitive_pair(Int p, Int r, Int s) {
    require_prime(p);
    if (r < 0 || s < 0)
        throw std::invalid_argument("primitive_pair: weights must be nonnegative");
    if (r == s) return {0, 0, r, -1};

    // Highest index where the digit expansions differ.
    Int m = -1;
    Int rr = r, ss = s;
    for (Int i = 0; rr != 0 || ss != 0; ++i) {
        if (rr % p != ss % p) m = i;
        rr /= p;
        ss /= p;
    }

    Int modulus = 1;
    for (Int i = 0; i <= m; ++i) modulus *= p;
    return {r % modulus, s % modulus, r - (r % modulus), m};
}

inline Int epsilon(Int p, Int r, Int s) { return primitive_pair(p, r, s).epsilon; }

} // namespace sl2tilt
