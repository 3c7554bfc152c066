#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "sl2tilt/padic.hpp"

namespace sl2tilt {

/// One rule application in a derivation; rule names follow the lemma labels
/// so a verdict can be audited step by step.
struct TraceStep {
    std::string rule;
    std::string detail;
    bool result;
};

struct Verdict {
    bool tilting;
    std::vector<TraceStep> trace;
};

/// Residues mod p and whether r, s share a band {np-1, ..., (n+1)p-1}.
struct PairClass {
    Int r0;
    Int s0;
    bool same_band;
};

namespace detail {

inline std::string pair_str(Int p, Int r, Int s) {
    std::ostringstream out;
    out << "(p=" << p << ", r=" << r << ", s=" << s << ")";
    return out.str();
}

} // namespace detail

/// Bands containing r: n = floor((r+1)/p), and additionally n-1 when r is
/// the top element (n)p - 1 of the band below.
inline bool same_band(Int p, Int r, Int s) {
    Int nr = (r + 1) / p;
    Int ns = (s + 1) / p;
    if (nr == ns) return true;
    bool r_top = (r + 1) % p == 0; // r = nr*p - 1, also top of band nr-1
    bool s_top = (s + 1) % p == 0;
    if (r_top && nr - 1 == ns) return true;
    if (s_top && ns - 1 == nr) return true;
    return false;
}

inline PairClass classify(Int p, Int r, Int s) {
    require_prime(p);
    if (r < 0 || s < 0)
        throw std::invalid_argument("classify: weights must be nonnegative");
    return {r % p, s % p, same_band(p, r, s)};
}

/// Lemma notTilting / notTilting2 combined: both residues differ from p-1
/// and the pair shares no band.  When true, the pair cannot be tilting.
inline bool necessary_not_tilting(Int p, Int r, Int s) {
    PairClass cls = classify(p, r, s);
    return cls.r0 != p - 1 && cls.s0 != p - 1 && !cls.same_band;
}

namespace detail {

/// Witness a = c-1, n for rhat = a*p^n + p^n - 1 with a in {0,...,p-2}.
/// Uniquely determined: rhat+1 = (a+1)p^n with p not dividing a+1.
struct FormWitness {
    bool matches;
    Int a;
    Int n;
};

inline FormWitness steinberg_form(Int p, Int r_hat) {
    Int v = r_hat + 1;
    Int n = 0;
    while (v % p == 0) {
        v /= p;
        ++n;
    }
    if (v <= p - 1) return {true, v - 1, n};
    return {false, 0, 0};
}

inline Int pow_i(Int p, Int n) {
    Int v = 1;
    while (n-- > 0) v *= p;
    return v;
}

/// Main Theorem criterion without trace collection.
inline bool explicit_tilting(Int p, Int r, Int s) {
    PrimitivePair pr = primitive_pair(p, r, s);
    FormWitness w1 = steinberg_form(p, pr.r_hat);
    if (w1.matches && pr.s_hat < pow_i(p, w1.n + 1)) return true;
    FormWitness w2 = steinberg_form(p, pr.s_hat);
    return w2.matches && pr.r_hat < pow_i(p, w2.n + 1);
}

/// Lemma-driven recursion without trace collection; r, s >= -1.
inline bool recursive_tilting(Int p, Int r, Int s) {
    if (r == -1 || s == -1) return true;
    if (r <= p - 1 && s <= p - 1) return true;
    Int r0 = r % p, s0 = s % p;
    if (r0 == p - 1 && s0 == p - 1)
        return recursive_tilting(p, r / p, s / p);
    if (s0 == p - 1)
        return recursive_tilting(p, r / p, s / p) &&
               recursive_tilting(p, r / p - 1, s / p);
    if (r0 == p - 1)
        return recursive_tilting(p, s / p, r / p) &&
               recursive_tilting(p, s / p - 1, r / p);
    return r / p == s / p;
}

} // namespace detail

/// Explicit p-adic criterion: (r,s) is tilting iff its primitive (rhat, shat)
/// has rhat = a*p^n + p^n - 1 with a in {0,...,p-2} and shat < p^{n+1}, or
/// the same with the roles swapped.
inline Verdict is_tilting_explicit(Int p, Int r, Int s) {
    require_prime(p);
    if (r < 0 || s < 0)
        throw std::invalid_argument("is_tilting_explicit: weights must be nonnegative");
    Verdict v;
    PrimitivePair pr = primitive_pair(p, r, s);
    {
        std::ostringstream d;
        d << detail::pair_str(p, r, s) << " has primitive (" << pr.r_hat << ", "
          << pr.s_hat << "), epsilon=" << pr.epsilon << ", m=" << pr.m;
        v.trace.push_back({"primitive", d.str(), true});
    }
    detail::FormWitness w1 = detail::steinberg_form(p, pr.r_hat);
    if (w1.matches && pr.s_hat < detail::pow_i(p, w1.n + 1)) {
        std::ostringstream d;
        d << "rhat=" << pr.r_hat << " = " << w1.a << "*" << p << "^" << w1.n
          << " + " << p << "^" << w1.n << " - 1 and shat=" << pr.s_hat << " < "
          << detail::pow_i(p, w1.n + 1);
        v.trace.push_back({"mainTheorem(1)", d.str(), true});
        v.tilting = true;
        return v;
    }
    detail::FormWitness w2 = detail::steinberg_form(p, pr.s_hat);
    if (w2.matches && pr.r_hat < detail::pow_i(p, w2.n + 1)) {
        std::ostringstream d;
        d << "shat=" << pr.s_hat << " = " << w2.a << "*" << p << "^" << w2.n
          << " + " << p << "^" << w2.n << " - 1 and rhat=" << pr.r_hat << " < "
          << detail::pow_i(p, w2.n + 1);
        v.trace.push_back({"mainTheorem(2)", d.str(), true});
        v.tilting = true;
        return v;
    }
    v.trace.push_back({"mainTheorem",
                       "neither rhat nor shat has the form a*p^n + p^n - 1 "
                       "with the partner below p^{n+1}",
                       false});
    v.tilting = false;
    return v;
}

namespace detail {

inline void recursive_traced(Int p, Int r, Int s, Verdict& v) {
    std::string here = pair_str(p, r, s);
    if (r == -1 || s == -1) {
        v.trace.push_back({"zeroModule", here + ": weight -1 is the zero module", true});
        return;
    }
    Int r0 = r % p, s0 = s % p;
    if (r <= p - 1 && s <= p - 1) {
        v.trace.push_back({"baseCase", here + ": both weights below p", true});
        return;
    }
    if (r0 == p - 1 && s0 == p - 1) {
        recursive_traced(p, r / p, s / p, v);
        bool sub = v.trace.back().result;
        v.trace.push_back(
            {"p-1", here + ": both residues p-1, reduces to (" +
                        std::to_string(r / p) + ", " + std::to_string(s / p) + ")",
             sub});
        return;
    }
    if (s0 == p - 1 || r0 == p - 1) {
        Int a = r, b = s;
        bool dual = (r0 == p - 1);
        if (dual) std::swap(a, b); // (nabla(r) (x) delta(s))* = nabla(s) (x) delta(r)
        Int t = a / p, u = b / p;
        recursive_traced(p, t, u, v);
        bool first = v.trace.back().result;
        bool second = true;
        if (first) {
            recursive_traced(p, t - 1, u, v);
            second = v.trace.back().result;
        }
        std::ostringstream d;
        d << here << (dual ? " (after duality swap)" : "")
          << ": needs (" << t << ", " << u << ") and (" << t - 1 << ", " << u << ")";
        v.trace.push_back({dual ? "duality+oddPrimeTiltings" : "oddPrimeTiltings",
                           d.str(), first && second});
        return;
    }
    bool band = r / p == s / p;
    std::ostringstream d;
    d << here << ": neither residue is p-1; "
      << (band ? "shared band (tensorE)" : "no shared band (notTilting2)");
    v.trace.push_back({band ? "tensorE" : "notTilting2", d.str(), band});
}

} // namespace detail

/// Recursive decider built from Lemmas p-1, odd-prime-tiltings, tensorE and
/// notTilting2, with duality handling the mirrored case.  Weights may be -1
/// (the zero module, which counts as tilting).
inline Verdict is_tilting_recursive(Int p, Int r, Int s) {
    require_prime(p);
    if (r < -1 || s < -1)
        throw std::invalid_argument("is_tilting_recursive: weights must be >= -1");
    Verdict v;
    detail::recursive_traced(p, r, s, v);
    v.tilting = v.trace.back().result;
    return v;
}

} // namespace sl2tilt
