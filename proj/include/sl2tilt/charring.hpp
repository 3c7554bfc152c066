#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2tilt/padic.hpp"

namespace sl2tilt {

// Weights above this are refused; exhaustive sweeps never get close and the
// guard keeps exponent arithmetic far away from int64 overflow.
inline constexpr Int kMaxWeight = Int{1} << 20;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in character arithmetic");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in character arithmetic");
    return r;
}

/// Exact integer Laurent polynomial in one variable, sparse canonical form:
/// the exponent -> coefficient map never stores a zero coefficient.
class LaurentChar {
public:
    LaurentChar() = default;

    static LaurentChar monomial(Int exponent, Int coefficient) {
        LaurentChar c;
        c.add_term(exponent, coefficient);
        return c;
    }

    void add_term(Int exponent, Int coefficient) {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
        if (!inserted) {
            it->second = checked_add(it->second, coefficient);
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coefficient(Int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? 0 : it->second;
    }

    bool is_zero() const { return terms_.empty(); }

    Int max_exponent() const {
        if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
        return terms_.rbegin()->first;
    }

    Int min_exponent() const {
        if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
        return terms_.begin()->first;
    }

    bool symmetric() const {
        for (const auto& [e, c] : terms_)
            if (coefficient(-e) != c) return false;
        return true;
    }

    /// Evaluation at x = 1; the dimension of the underlying module.
    Int dimension() const {
        Int d = 0;
        for (const auto& [e, c] : terms_) d = checked_add(d, c);
        return d;
    }

    const std::map<Int, Int>& terms() const { return terms_; }

    friend bool operator==(const LaurentChar&, const LaurentChar&) = default;

    LaurentChar& operator+=(const LaurentChar& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    LaurentChar& operator-=(const LaurentChar& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentChar operator+(LaurentChar a, const LaurentChar& b) { return a += b; }
    friend LaurentChar operator-(LaurentChar a, const LaurentChar& b) { return a -= b; }

    friend LaurentChar operator*(const LaurentChar& a, const LaurentChar& b) {
        LaurentChar out;
        if (a.terms_.empty() || b.terms_.empty()) return out;
        const Int lo = checked_add(a.min_exponent(), b.min_exponent());
        const Int hi = checked_add(a.max_exponent(), b.max_exponent());
        // Dense accumulation over the exponent span; far cheaper than
        // tree inserts and the kMaxWeight guard keeps the span small.
        std::vector<Int> acc(static_cast<std::size_t>(hi - lo + 1), 0);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Int& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
                slot = checked_add(slot, checked_mul(ca, cb));
            }
        for (std::size_t i = 0; i < acc.size(); ++i)
            if (acc[i] != 0)
                out.terms_.emplace_hint(out.terms_.end(), lo + static_cast<Int>(i), acc[i]);
        return out;
    }

    friend LaurentChar operator*(Int k, const LaurentChar& a) {
        LaurentChar out;
        for (const auto& [e, c] : a.terms_) out.add_term(e, checked_mul(k, c));
        return out;
    }

    /// Terms in strictly decreasing exponent order, unit coefficients
    /// suppressed, exponent 0 rendered as the bare coefficient.
    /// Example: "x^5 + 2x + 2x^-1 + x^-5".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto [e, c] = *it;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            Int mag = c < 0 ? -c : c;
            if (e == 0) {
                out << mag;
            } else {
                if (mag != 1) out << mag;
                out << "x";
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

private:
    std::map<Int, Int> terms_;
};

/// Weyl character chi(r) = x^r + x^{r-2} + ... + x^{-r}; chi(-1) = 0.
inline LaurentChar chi(Int r) {
    if (r < -1) throw std::invalid_argument("chi: weight must be >= -1");
    if (r > kMaxWeight) throw std::overflow_error("chi: weight exceeds supported range");
    LaurentChar c;
    if (r == -1) return c;
    for (Int i = 0; i <= r; ++i) c.add_term(r - 2 * i, 1);
    return c;
}

/// The Clebsch-Gordan constituents of chi(r)*chi(s): [r+s, r+s-2, ..., r-s].
inline std::vector<Int> clebsch_gordan(Int r, Int s) {
    if (s < 0 || r < s)
        throw std::invalid_argument("clebsch_gordan: requires r >= s >= 0");
    std::vector<Int> weights;
    weights.reserve(static_cast<std::size_t>(s) + 1);
    for (Int i = 0; i <= s; ++i) weights.push_back(r + s - 2 * i);
    return weights;
}

/// Exponent e -> p*e on every monomial.
inline LaurentChar frobenius_twist(const LaurentChar& c, Int p) {
    require_prime(p);
    LaurentChar out;
    for (const auto& [e, k] : c.terms()) out.add_term(checked_mul(e, p), k);
    return out;
}

/// Expansion of a symmetric Laurent polynomial in the Weyl basis {chi(m)}.
/// Multiplicities may be negative for non-character inputs.
struct WeylExpansion {
    std::map<Int, Int> multiplicities;

    LaurentChar to_char() const {
        LaurentChar c;
        for (const auto& [m, k] : multiplicities) c += k * chi(m);
        return c;
    }

    Int dimension() const {
        Int d = 0;
        for (const auto& [m, k] : multiplicities)
            d = checked_add(d, checked_mul(k, m + 1));
        return d;
    }

    bool nonnegative() const {
        for (const auto& [m, k] : multiplicities)
            if (k < 0) return false;
        return true;
    }

    /// "chi(5) + chi(1)" style, descending weights.
    std::string to_string(const char* chi_name = "chi") const {
        if (multiplicities.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = multiplicities.rbegin(); it != multiplicities.rend(); ++it) {
            auto [m, k] = *it;
            if (!first) out << " + ";
            first = false;
            if (k != 1) out << k << "*";
            out << chi_name << "(" << m << ")";
        }
        return out.str();
    }
};

/// Peel the top exponent repeatedly, subtracting k*chi(e) each time.
inline WeylExpansion weyl_expand(const LaurentChar& c) {
    if (!c.symmetric())
        throw std::invalid_argument("weyl_expand: input is not symmetric under x -> 1/x");
    WeylExpansion ex;
    LaurentChar rest = c;
    while (!rest.is_zero()) {
        Int e = rest.max_exponent();
        Int k = rest.coefficient(e);
        ex.multiplicities[e] = k;
        rest -= k * chi(e);
    }
    return ex;
}

/// Long division from the top exponent; nullopt when the division leaves a
/// remainder (NotDivisible is a normal result, not an error).
inline std::optional<LaurentChar> exact_divide(const LaurentChar& numerator,
                                               const LaurentChar& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    LaurentChar quotient;
    LaurentChar rest = numerator;
    const Int div_top = divisor.max_exponent();
    const Int div_bot = divisor.min_exponent();
    const Int div_lead = divisor.coefficient(div_top);
    while (!rest.is_zero()) {
        Int e = rest.max_exponent();
        Int c = rest.coefficient(e);
        if (c % div_lead != 0) return std::nullopt;
        Int qe = e - div_top;
        // The lowest remaining term can no longer be matched.
        if (qe < rest.min_exponent() - div_bot) return std::nullopt;
        LaurentChar term = LaurentChar::monomial(qe, c / div_lead);
        quotient += term;
        rest -= term * divisor;
    }
    return quotient;
}

/// Does chi(p-1) divide chi(r)?  Decided both by long division and by the
/// congruence r+1 = 0 mod p; a disagreement means an arithmetic bug.
inline bool steinberg_divides(Int p, Int r) {
    require_prime(p);
    if (r < 0) throw std::invalid_argument("steinberg_divides: r must be nonnegative");
    bool by_division = exact_divide(chi(r), chi(p - 1)).has_value();
    bool by_congruence = (r + 1) % p == 0;
    if (by_division != by_congruence)
        throw std::logic_error("steinberg_divides: division and congruence disagree");
    return by_division;
}

/// Character identity underlying Jantzen's short exact sequence:
/// chi(pt+v) = chi(v)*chi(t)^F + chi(p-2-v)*chi(t-1)^F for 0 <= v <= p-2.
inline bool jantzen_identity_check(Int p, Int t, Int v) {
    require_prime(p);
    if (t < 0) throw std::invalid_argument("jantzen_identity_check: t must be nonnegative");
    if (v < 0 || v > p - 2)
        throw std::invalid_argument("jantzen_identity_check: v must lie in [0, p-2]");
    LaurentChar lhs = chi(p * t + v);
    LaurentChar rhs = chi(v) * frobenius_twist(chi(t), p) +
                      chi(p - 2 - v) * frobenius_twist(chi(t - 1), p);
    return lhs == rhs;
}

} // namespace sl2tilt
