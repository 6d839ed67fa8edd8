#include "doctest.h"

#include <random>

#include "qflab/eta.hpp"
#include "qflab/qseries.hpp"

using namespace qflab;

namespace {

// Coefficients of prod (1 - q^n) from Euler's pentagonal number theorem.
std::vector<i64> pentagonal(i64 upto)
{
    std::vector<i64> c(static_cast<std::size_t>(upto + 1), 0);
    for (i64 j = -100; j <= 100; ++j) {
        const i64 k = j * (3 * j - 1) / 2;
        if (k <= upto)
            c[k] = (j % 2 == 0) ? 1 : -1;
    }
    return c;
}

QSeries random_series(std::mt19937_64& rng, i64 prec)
{
    std::uniform_int_distribution<i64> dist(-5, 5);
    std::vector<i64> c(static_cast<std::size_t>(prec + 1));
    for (auto& x : c)
        x = dist(rng);
    return QSeries(1, 0, c);
}

} // namespace

TEST_CASE("series_mul examples")
{
    const QSeries a(1, 0, {1, 1, 0, 0});
    const QSeries b(1, 0, {1, -1, 0, 0});
    CHECK(series_mul(a, b) == QSeries(1, 0, {1, 0, -1, 0}));

    const auto x = QSeries::monomial(24, 1, 1, 48);
    const auto y = QSeries::monomial(24, 23, 1, 48);
    const QSeries xy = series_mul(x, y);
    CHECK(xy[24] == 1);
    CHECK(xy.valuation() == 24);
    CHECK(regrade(QSeries::monomial(1, 1, 1, 2), 24)[24] == 1);
}

TEST_CASE("series precision follows the operands")
{
    const QSeries a(1, 2, {1, 0, 3}); // q^2 + 3q^4 + O(q^5)
    const QSeries b(1, 0, {1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(series_mul(a, b).prec() == 4);
    CHECK(series_add(a, b).prec() == 4);
    CHECK_THROWS_AS(a[5], std::out_of_range);
    CHECK(a[1] == 0);
}

TEST_CASE("ring laws on random series")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const QSeries a = random_series(rng, 30), b = random_series(rng, 25), c = random_series(rng, 40);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c)));
    }
}

TEST_CASE("eta expansion follows the pentagonal numbers")
{
    const QSeries eta = eta_expansion(1, 1, 30 * 24);
    const auto pent = pentagonal(30);
    CHECK(eta.low() == 1);
    for (i64 k = 0; k < 30; ++k)
        CHECK(eta[1 + 24 * k] == pent[k]);
    for (i64 i = 0; i <= eta.prec(); ++i)
        if ((i - 1) % 24 != 0)
            CHECK(eta[i] == 0);
}

TEST_CASE("series inversion")
{
    const QSeries p(1, 0, pentagonal(200));
    const QSeries one = series_mul(p, series_inverse(p));
    CHECK(one.prec() == 200);
    CHECK(one[0] == 1);
    for (i64 i = 1; i <= 200; ++i)
        CHECK(one[i] == 0);

    // 1/prod(1 - q^n) is the partition generating function.
    const QSeries parts = series_inverse(p);
    CHECK(parts[5] == 7);
    CHECK(parts[100] == 190569292);

    const QSeries unit = series_mul(eta_expansion(1, -1, 500), eta_expansion(1, 1, 500));
    CHECK(unit[0] == 1);
    for (i64 i = 1; i <= unit.prec(); ++i)
        CHECK(unit[i] == 0);

    CHECK_THROWS_AS(series_inverse(QSeries(1, 0, {2, 1})), std::domain_error);
}

TEST_CASE("overflow is detected")
{
    const QSeries big(1, 0, {INT64_MAX / 2 + 1, INT64_MAX / 2 + 1});
    CHECK_THROWS_AS(series_mul(big, big), OverflowError);
    CHECK_THROWS_AS(series_add(big, big), OverflowError);
}

TEST_CASE("json roundtrip")
{
    const QSeries s = eta_expansion(1, -1, 100);
    CHECK(series_from_json(series_to_json(s)) == s);
    CHECK(series_to_json(QSeries(1, 0, {1, 2})) == R"({"D":1,"coeffs":[1,2],"prec":1})");
    CHECK_THROWS(series_from_json(R"({"D":1,"prec":5,"coeffs":[1,2]})"));
}

TEST_CASE("theta_qseries")
{
    CHECK(theta_qseries(QuadForm::diagonal({1, 2, 3, 10}), 3) == QSeries(1, 0, {1, 2, 2, 6}));
    CHECK(theta_qseries(QuadForm::diagonal({1, 1}), 0) == QSeries(1, 0, {1}));
}
