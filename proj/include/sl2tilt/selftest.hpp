#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sl2tilt/decide.hpp"
#include "sl2tilt/tiltchar.hpp"

namespace sl2tilt {

struct SuiteResult {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }

    void fail(const std::string& counterexample) {
        if (failures == 0) first_counterexample = counterexample;
        ++failures;
    }
};

using DeciderFn = std::function<bool(Int, Int, Int)>;

namespace suites {

/// The Main Theorem restated as a test: the explicit criterion and the
/// lemma recursion must agree everywhere.  The explicit side is injectable
/// so a corrupted criterion can be used as a negative control.
inline SuiteResult oracle_equivalence(Int p, Int max_weight,
                                      const DeciderFn& explicit_fn = detail::explicit_tilting) {
    SuiteResult res{"oracle-equivalence"};
    for (Int r = 0; r <= max_weight; ++r)
        for (Int s = 0; s <= max_weight; ++s) {
            ++res.checked;
            if (explicit_fn(p, r, s) != detail::recursive_tilting(p, r, s))
                res.fail(detail::pair_str(p, r, s));
        }
    return res;
}

inline SuiteResult duality(Int p, Int max_weight) {
    SuiteResult res{"duality"};
    for (Int r = 0; r <= max_weight; ++r)
        for (Int s = 0; s <= r; ++s) {
            ++res.checked;
            if (detail::explicit_tilting(p, r, s) != detail::explicit_tilting(p, s, r) ||
                detail::recursive_tilting(p, r, s) != detail::recursive_tilting(p, s, r))
                res.fail(detail::pair_str(p, r, s));
        }
    return res;
}

inline SuiteResult near_diagonal(Int p, Int max_weight) {
    SuiteResult res{"near-diagonal"};
    for (Int r = 0; r <= max_weight; ++r)
        for (Int s = std::max<Int>(0, r - 1); s <= std::min(max_weight, r + 1); ++s) {
            ++res.checked;
            if (!detail::explicit_tilting(p, r, s)) res.fail(detail::pair_str(p, r, s));
        }
    return res;
}

inline SuiteResult band_sufficiency(Int p, Int max_weight) {
    SuiteResult res{"band-sufficiency"};
    for (Int n = 0; n * p - 1 <= max_weight; ++n) {
        Int lo = std::max<Int>(0, n * p - 1);
        Int hi = std::min(max_weight, (n + 1) * p - 1);
        for (Int r = lo; r <= hi; ++r)
            for (Int s = lo; s <= hi; ++s) {
                ++res.checked;
                if (!detail::explicit_tilting(p, r, s)) res.fail(detail::pair_str(p, r, s));
            }
    }
    return res;
}

inline SuiteResult steinberg_pairs(Int p, Int max_weight) {
    SuiteResult res{"steinberg-pairs"};
    for (Int pn = 1; pn - 1 <= max_weight; pn *= p)
        for (Int pm = 1; pm - 1 <= max_weight; pm *= p) {
            ++res.checked;
            if (!detail::explicit_tilting(p, pn - 1, pm - 1))
                res.fail(detail::pair_str(p, pn - 1, pm - 1));
        }
    return res;
}

inline SuiteResult primitive_invariance(Int p, Int max_weight) {
    SuiteResult res{"primitive-invariance"};
    for (Int r = 0; r <= max_weight; ++r)
        for (Int s = 0; s <= max_weight; ++s) {
            ++res.checked;
            PrimitivePair pr = primitive_pair(p, r, s);
            if (detail::explicit_tilting(p, r, s) !=
                detail::explicit_tilting(p, pr.r_hat, pr.s_hat))
                res.fail(detail::pair_str(p, r, s));
        }
    return res;
}

/// Shadow of the splitting theorem: a tilting pair with r = pt + v,
/// v <= p-2, forces tilting at every v' in {0,...,p-1} and at
/// (p-1) + p(t-1).
inline SuiteResult propagation(Int p, Int max_weight) {
    SuiteResult res{"propagation"};
    for (Int r = 0; r <= max_weight; ++r) {
        if (r % p == p - 1) continue;
        Int t = r / p;
        for (Int s = 0; s <= max_weight; ++s) {
            if (!detail::recursive_tilting(p, r, s)) continue;
            ++res.checked;
            for (Int v = 0; v <= p - 1; ++v)
                if (!detail::recursive_tilting(p, p * t + v, s))
                    res.fail(detail::pair_str(p, p * t + v, s));
            if (!detail::recursive_tilting(p, (p - 1) + p * (t - 1), s))
                res.fail(detail::pair_str(p, (p - 1) + p * (t - 1), s));
        }
    }
    return res;
}

inline SuiteResult necessary_condition(Int p, Int max_weight) {
    SuiteResult res{"necessary-not-tilting"};
    for (Int r = 0; r <= max_weight; ++r)
        for (Int s = 0; s <= max_weight; ++s) {
            if (!necessary_not_tilting(p, r, s)) continue;
            ++res.checked;
            if (detail::explicit_tilting(p, r, s) || detail::recursive_tilting(p, r, s))
                res.fail(detail::pair_str(p, r, s));
        }
    return res;
}

inline SuiteResult jantzen_identity(Int p, Int max_t) {
    SuiteResult res{"jantzen-identity"};
    for (Int t = 0; t <= max_t; ++t)
        for (Int v = 0; v <= p - 2; ++v) {
            ++res.checked;
            if (!jantzen_identity_check(p, t, v)) {
                std::ostringstream d;
                d << "(p=" << p << ", t=" << t << ", v=" << v << ")";
                res.fail(d.str());
            }
        }
    return res;
}

inline SuiteResult steinberg_divisibility(Int p, Int max_r) {
    SuiteResult res{"steinberg-divisibility"};
    for (Int r = 0; r <= max_r; ++r) {
        ++res.checked;
        try {
            steinberg_divides(p, r);
        } catch (const std::logic_error&) {
            std::ostringstream d;
            d << "(p=" << p << ", r=" << r << ")";
            res.fail(d.str());
        }
    }
    return res;
}

/// Every theorem-certified tilting pair must decompose greedily into
/// tilting characters, reconstruct exactly, and account for the full
/// dimension (r+1)(s+1).
inline SuiteResult greedy_consistency(Int p, Int max_weight) {
    SuiteResult res{"greedy-consistency"};
    TiltingCharTable table(p);
    for (Int r = 0; r <= max_weight; ++r)
        for (Int s = 0; s <= r; ++s) {
            if (!detail::explicit_tilting(p, r, s)) continue;
            ++res.checked;
            LaurentChar product = chi(r) * chi(s);
            GreedyResult g = greedy_decompose(table, product);
            if (!g.ok() || g.decomposition->to_char(table) != product ||
                g.decomposition->dimension(table) != (r + 1) * (s + 1))
                res.fail(detail::pair_str(p, r, s));
        }
    return res;
}

} // namespace suites

/// The suites run by the CLI selftest subcommand, over each prime in ps.
inline std::vector<SuiteResult> run_selftest(const std::vector<Int>& ps, Int max_weight,
                                             const DeciderFn& explicit_fn = detail::explicit_tilting) {
    std::vector<SuiteResult> all;
    for (Int p : ps) {
        auto tag = [&](SuiteResult r) {
            r.name += " p=" + std::to_string(p);
            all.push_back(std::move(r));
        };
        tag(suites::oracle_equivalence(p, max_weight, explicit_fn));
        tag(suites::duality(p, max_weight));
        tag(suites::band_sufficiency(p, max_weight));
        tag(suites::primitive_invariance(p, max_weight));
        tag(suites::jantzen_identity(p, std::min<Int>(max_weight, 100)));
        tag(suites::steinberg_divisibility(p, max_weight));
        tag(suites::greedy_consistency(p, std::min<Int>(max_weight, 200)));
    }
    return all;
}

} // namespace sl2tilt
