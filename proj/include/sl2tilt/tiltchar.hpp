#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "sl2tilt/charring.hpp"

namespace sl2tilt {

/// Characters of the indecomposable tilting modules T(m), built by the
/// recursion T(m) = T(p-1+t) (x) T(n)^F for m = p-1+t+pn, with the base
/// cases Ch T(m) = chi(m) for m <= p-1 and
/// Ch T(p-1+t) = chi(p-1+t) + chi(p-1-t) for 1 <= t <= p-1.
///
/// The memo table is not synchronized; confine an instance to one thread.
class TiltingCharTable {
public:
    explicit TiltingCharTable(Int p) : p_(p) { require_prime(p); }

    Int prime() const { return p_; }

    const LaurentChar& char_of(Int m) {
        if (m < 0) throw std::invalid_argument("tilting_char: m must be nonnegative");
        if (m > kMaxWeight) throw std::overflow_error("tilting_char: m exceeds supported range");
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        LaurentChar c;
        if (m <= p_ - 1) {
            c = chi(m);
        } else if (m <= 2 * p_ - 2) {
            Int t = m - (p_ - 1);
            c = chi(p_ - 1 + t) + chi(p_ - 1 - t);
        } else {
            Int rem = m - (p_ - 1);
            Int t = rem % p_;
            Int n = rem / p_;
            c = char_of(p_ - 1 + t) * frobenius_twist(char_of(n), p_);
        }
        return cache_.emplace(m, std::move(c)).first->second;
    }

private:
    Int p_;
    std::map<Int, LaurentChar> cache_;
};

inline LaurentChar tilting_char(Int p, Int m) {
    TiltingCharTable table(p);
    return table.char_of(m);
}

/// Multiset of indecomposable tilting characters summing to a given character.
struct TiltingDecomposition {
    std::map<Int, Int> multiplicities;

    Int dimension(TiltingCharTable& table) const {
        Int d = 0;
        for (const auto& [m, k] : multiplicities)
            d = checked_add(d, checked_mul(k, table.char_of(m).dimension()));
        return d;
    }

    LaurentChar to_char(TiltingCharTable& table) const {
        LaurentChar c;
        for (const auto& [m, k] : multiplicities) c += k * table.char_of(m);
        return c;
    }
};

/// Fail carries the first weight at which a Weyl multiplicity went negative.
struct GreedyResult {
    std::optional<TiltingDecomposition> decomposition;
    Int failed_weight = -1;

    bool ok() const { return decomposition.has_value(); }
};

/// Peel the top surviving weight m (Weyl multiplicity k) and subtract
/// k * Ch T(m); succeeds when the remainder reaches zero with every
/// intermediate multiplicity nonnegative.
inline GreedyResult greedy_decompose(TiltingCharTable& table, const LaurentChar& c) {
    if (!c.symmetric())
        throw std::invalid_argument("greedy_decompose: input is not symmetric");
    TiltingDecomposition out;
    LaurentChar rest = c;
    while (!rest.is_zero()) {
        Int m = rest.max_exponent();
        Int k = rest.coefficient(m);
        if (k < 0) return {std::nullopt, m};
        out.multiplicities[m] = k;
        rest -= k * table.char_of(m);
    }
    return {std::move(out), -1};
}

inline GreedyResult greedy_decompose(Int p, const LaurentChar& c) {
    TiltingCharTable table(p);
    return greedy_decompose(table, c);
}

} // namespace sl2tilt
