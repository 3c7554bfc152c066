#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "sl2tilt/charring.hpp"

using namespace sl2tilt;

namespace {

// Brute-force dense convolution over a shifted coefficient vector; the
// independent oracle for LaurentChar multiplication.
LaurentChar dense_multiply(const LaurentChar& a, const LaurentChar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Int alo = a.min_exponent(), ahi = a.max_exponent();
    Int blo = b.min_exponent(), bhi = b.max_exponent();
    std::vector<Int> out(static_cast<std::size_t>(ahi - alo + bhi - blo + 1), 0);
    for (Int i = alo; i <= ahi; ++i)
        for (Int j = blo; j <= bhi; ++j)
            out[static_cast<std::size_t>(i - alo + j - blo)] +=
                a.coefficient(i) * b.coefficient(j);
    LaurentChar c;
    for (std::size_t k = 0; k < out.size(); ++k)
        c.add_term(alo + blo + static_cast<Int>(k), out[k]);
    return c;
}

LaurentChar from_terms(std::initializer_list<std::pair<Int, Int>> terms) {
    LaurentChar c;
    for (auto [e, k] : terms) c.add_term(e, k);
    return c;
}

} // namespace

TEST_CASE("chi: defining expansion") {
    CHECK(chi(1) == from_terms({{1, 1}, {-1, 1}}));
    CHECK(chi(-1).is_zero());
    CHECK(chi(2) == from_terms({{2, 1}, {0, 1}, {-2, 1}}));
    CHECK_THROWS_AS(chi(-2), std::invalid_argument);
    for (Int r = 0; r <= 500; ++r) {
        CHECK(chi(r).dimension() == r + 1);
        CHECK(chi(r).symmetric());
    }
}

TEST_CASE("multiply: examples against the dense oracle") {
    LaurentChar prod = chi(2) * chi(1);
    CHECK(prod == from_terms({{3, 1}, {1, 2}, {-1, 2}, {-3, 1}}));
    CHECK(prod == chi(3) + chi(1));

    CHECK((chi(4) * LaurentChar{}).is_zero());
    CHECK(chi(1) * chi(1) == from_terms({{2, 1}, {0, 2}, {-2, 1}}));
    CHECK(chi(1) * chi(1) == chi(2) + chi(0));

    for (Int r = 0; r <= 40; ++r)
        for (Int s = 0; s <= r; ++s)
            CHECK(chi(r) * chi(s) == dense_multiply(chi(r), chi(s)));
}

TEST_CASE("multiply: dimension is multiplicative, symmetry preserved") {
    for (Int r = 0; r <= 60; ++r)
        for (Int s = 0; s <= r; ++s) {
            LaurentChar prod = chi(r) * chi(s);
            CHECK(prod.dimension() == (r + 1) * (s + 1));
            CHECK(prod.symmetric());
        }
}

TEST_CASE("chi(r)*chi(1) = chi(r-1) + chi(r+1)") {
    for (Int r = 1; r <= 500; ++r)
        CHECK(chi(r) * chi(1) == chi(r - 1) + chi(r + 1));
}

TEST_CASE("clebsch_gordan: weight list matches the product") {
    CHECK(clebsch_gordan(3, 2) == std::vector<Int>{5, 3, 1});
    CHECK(clebsch_gordan(4, 0) == std::vector<Int>{4});
    CHECK(clebsch_gordan(1, 1) == std::vector<Int>{2, 0});
    CHECK_THROWS_AS(clebsch_gordan(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(clebsch_gordan(3, -1), std::invalid_argument);

    for (Int r = 0; r <= 200; ++r)
        for (Int s = 0; s <= r; ++s) {
            auto weights = clebsch_gordan(r, s);
            REQUIRE(weights.size() == static_cast<std::size_t>(s) + 1);
            LaurentChar sum;
            for (Int w : weights) sum += chi(w);
            CHECK(sum == chi(r) * chi(s));
        }
}

TEST_CASE("weyl_expand") {
    WeylExpansion a = weyl_expand(from_terms({{2, 1}, {0, 2}, {-2, 1}}));
    CHECK(a.multiplicities == std::map<Int, Int>{{2, 1}, {0, 1}});

    CHECK(weyl_expand(LaurentChar{}).multiplicities.empty());

    WeylExpansion b = weyl_expand(chi(5) + chi(1));
    CHECK(b.multiplicities == std::map<Int, Int>{{5, 1}, {1, 1}});

    CHECK_THROWS_AS(weyl_expand(LaurentChar::monomial(3, 1)), std::invalid_argument);
}

TEST_CASE("weyl_expand: round trip and dimension accounting") {
    // Pseudo-random but deterministic expansions with weights up to 400.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 50; ++trial) {
        WeylExpansion in;
        for (int i = 0; i < 8; ++i)
            in.multiplicities[static_cast<Int>(next() % 401)] =
                static_cast<Int>(next() % 5) + 1;
        LaurentChar c = in.to_char();
        WeylExpansion out = weyl_expand(c);
        CHECK(out.multiplicities == in.multiplicities);
        CHECK(out.dimension() == c.dimension());
        CHECK(out.to_char() == c);
    }
}

TEST_CASE("frobenius_twist") {
    CHECK(frobenius_twist(chi(1), 3) == from_terms({{3, 1}, {-3, 1}}));
    CHECK(frobenius_twist(LaurentChar{}, 5).is_zero());
    CHECK(frobenius_twist(chi(2), 2) == from_terms({{4, 1}, {0, 1}, {-4, 1}}));
    for (Int r = 0; r <= 100; ++r)
        CHECK(frobenius_twist(chi(r), 3).dimension() == chi(r).dimension());
}

TEST_CASE("exact_divide") {
    auto q = exact_divide(chi(5), chi(2));
    REQUIRE(q.has_value());
    CHECK(*q == from_terms({{3, 1}, {-3, 1}}));
    CHECK(*q * chi(2) == chi(5));

    CHECK_FALSE(exact_divide(chi(4), chi(1)).has_value());

    auto z = exact_divide(LaurentChar{}, chi(1));
    REQUIRE(z.has_value());
    CHECK(z->is_zero());

    CHECK_THROWS_AS(exact_divide(chi(3), LaurentChar{}), std::invalid_argument);
}

TEST_CASE("exact_divide: quotient times divisor reproduces the numerator") {
    for (Int r = 0; r <= 60; ++r)
        for (Int s = 0; s <= r; ++s) {
            LaurentChar prod = chi(r) * chi(s);
            auto q = exact_divide(prod, chi(s));
            REQUIRE(q.has_value());
            CHECK(*q * chi(s) == prod);
        }
}

TEST_CASE("steinberg_divides: congruence and division agree") {
    CHECK(steinberg_divides(3, 5));
    CHECK_FALSE(steinberg_divides(2, 4));
    CHECK(steinberg_divides(5, 4));
    for (Int p : {2, 3, 5, 7})
        for (Int r = 0; r <= 1000; ++r)
            CHECK(steinberg_divides(p, r) == ((r + 1) % p == 0));
}

TEST_CASE("jantzen character identity") {
    CHECK(jantzen_identity_check(2, 3, 0));
    CHECK(jantzen_identity_check(3, 0, 1));
    CHECK(jantzen_identity_check(5, 2, 3));
    CHECK_THROWS_AS(jantzen_identity_check(3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(jantzen_identity_check(3, 2, -1), std::invalid_argument);

    for (Int p : {2, 3, 5})
        for (Int t = 0; t <= 100; ++t)
            for (Int v = 0; v <= p - 2; ++v)
                CHECK(jantzen_identity_check(p, t, v));
}

TEST_CASE("chi(pt + p-1) factors through the Steinberg character") {
    for (Int p : {2, 3, 5})
        for (Int t = 0; t <= 120; ++t)
            CHECK(chi(p * t + p - 1) == chi(p - 1) * frobenius_twist(chi(t), p));
}

TEST_CASE("rendering") {
    CHECK(LaurentChar{}.to_string() == "0");
    CHECK(chi(1).to_string() == "x + x^-1");
    CHECK((chi(2) * chi(1)).to_string() == "x^3 + 2x + 2x^-1 + x^-3");
    CHECK((chi(4) + chi(2)).to_string() == "x^4 + 2x^2 + 2 + 2x^-2 + x^-4");
    CHECK((chi(0) - chi(1)).to_string() == "-x + 1 - x^-1");
}
