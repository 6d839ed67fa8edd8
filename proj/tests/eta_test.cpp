#include "doctest.h"

#include <numeric>

#include "qflab/eta.hpp"

using namespace qflab;

namespace {

// Nonzero terms of the printed expansions; all other coefficients up to the
// last listed exponent vanish.
const std::vector<std::vector<std::pair<i64, i64>>> printed_prefixes{
    {{2, 1}, {3, 1}, {5, 1}, {8, 1}, {12, 1}, {17, -2}, {18, -3}},
    {{3, 1}, {5, -1}, {7, -1}, {8, 1}, {10, -1}, {12, -1}, {15, 1}},
    {{7, 1}, {8, 1}, {10, 1}, {12, -1}, {15, -1}, {18, -2}, {20, -1}},
};

} // namespace

TEST_CASE("eta cubed matches the odd-square sum")
{
    const QSeries cube = eta_expansion(1, 3, 24 * 100);
    for (i64 i = 0; i <= cube.prec(); ++i) {
        i64 expect = 0;
        for (i64 n = 1; 3 * n * n <= i; ++n)
            if (3 * n * n == i)
                expect = kronecker(-4, n) * n;
        CHECK(cube[i] == expect);
    }
}

TEST_CASE("quotient expansions reproduce the printed prefixes")
{
    for (int i = 1; i <= 3; ++i) {
        const QSeries f = eta_quotient_expansion(level120_quotient(i), 30);
        CHECK(f.denom() == 1);
        const auto& terms = printed_prefixes[i - 1];
        std::vector<i64> expect(static_cast<std::size_t>(terms.back().first + 1), 0);
        for (const auto& [e, c] : terms)
            expect[e] = c;
        for (i64 n = 0; n < static_cast<i64>(expect.size()); ++n)
            CHECK(f.at_exponent(n) == expect[n]);
    }
}

TEST_CASE("lattice-sum coefficients equal the eta products")
{
    for (int i = 1; i <= 3; ++i) {
        const QSeries f = eta_quotient_expansion(level120_quotient(i), 200);
        for (i64 n = 1; n <= 200; ++n) {
            INFO("F" << i << " n=" << n);
            REQUIRE(level120_coefficient(i, n) == f.at_exponent(n));
            if (n % 5 == 1 || n % 5 == 4)
                CHECK(f.at_exponent(n) == 0);
        }
    }
    CHECK(level120_coefficient(1, 2) == 1);
    CHECK(level120_coefficient(2, 3) == 1);
    CHECK(level120_coefficient(1, 17) == -2);
}

TEST_CASE("b-weighted A3 sum vanishes")
{
    for (i64 n = 1; n <= 60; ++n)
        CHECK(level120_a3_b_weighted(n) == 0);
    CHECK(eta_quotient_expansion(level120_quotient(3), 10).at_exponent(7) == 1);
}

TEST_CASE("non-integral grading stays at D=24")
{
    const QSeries f = eta_quotient_expansion(EtaQuotient(1, {{1, 1}}), 5);
    CHECK(f.denom() == 24);
    CHECK(f.low() == 1);
    CHECK(f.prec() == 120);
    CHECK_THROWS_AS(eta_quotient_expansion(level120_quotient(1), 0), std::invalid_argument);
}

TEST_CASE("newman_check")
{
    const NewmanReport f1 = newman_check(level120_quotient(1));
    CHECK(f1.weight == 2);
    CHECK(f1.cond24a);
    CHECK(f1.cond24b);
    CHECK(f1.holds());
    CHECK(f1.character_discriminant == 13500);

    const NewmanReport trivial = newman_check(EtaQuotient(1, {}));
    CHECK(trivial.weight == 0);
    CHECK(trivial.holds());

    CHECK_FALSE(newman_check(EtaQuotient(1, {{1, 1}})).cond24a);

    for (int i = 1; i <= 3; ++i) {
        const auto q = level120_quotient(i);
        CHECK(newman_check(q).holds());
        for (i64 m = 1; m <= 1000; ++m)
            if (std::gcd(m, i64{120}) == 1)
                REQUIRE(eta_character(q, m) == kronecker(60, m));
    }
}

TEST_CASE("cusp orders")
{
    const auto orders = cusp_orders(level120_quotient(1));
    CHECK(orders.size() == 16);
    CHECK(orders.front().d == 1);
    CHECK(orders.front().order == 1);
    CHECK(orders.back().d == 120);
    CHECK(orders.back().order == 2);
    for (int i = 1; i <= 3; ++i) {
        const auto q = level120_quotient(i);
        const auto o = cusp_orders(q);
        CHECK(is_cusp_form(o));
        CHECK(is_holomorphic(o));
        CHECK(o.back().order == *eta_quotient_expansion(q, 30).valuation());
    }
    const EtaQuotient inv(6, {{1, -1}, {6, 1}});
    const auto oi = cusp_orders(inv);
    CHECK_FALSE(is_holomorphic(oi));
    const QSeries e = eta_quotient_expansion(inv, 5);
    CHECK(BigRational(*e.valuation(), e.denom()) == oi.back().order);
}

TEST_CASE("sturm_bound")
{
    CHECK(sturm_bound(120, 2) == 48);
    CHECK(sturm_bound(1, 12) == 1);
    CHECK(sturm_bound(11, 2) == 2);
    CHECK(gamma0_index(120) == 288);
    CHECK_THROWS_AS(sturm_bound(11, 3), std::invalid_argument);
}

TEST_CASE("unary theta identities")
{
    for (const auto& check : unary_theta_identities(600)) {
        INFO(check.name);
        CHECK(check.passed);
        CHECK(check.checked_through == 600);
    }
    CHECK_THROWS_AS(unary_theta_identities(10), std::invalid_argument);
}

TEST_CASE("eta quotient parsing")
{
    const EtaQuotient q = parse_eta_quotient("2:2,15:3,1:-1", 120);
    CHECK(q.exponents == level120_quotient(1).exponents);
    CHECK_THROWS_AS(parse_eta_quotient("7:1", 120), std::invalid_argument);
    CHECK_THROWS_AS(parse_eta_quotient("2:x", 120), std::invalid_argument);
    CHECK_THROWS_AS(parse_eta_quotient("2:0", 120), std::invalid_argument);
}
