#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qflab/arith.hpp"

using namespace qflab;

TEST_CASE("kronecker examples")
{
    CHECK(kronecker(4, 7) == 1);
    CHECK(kronecker(-4, 7) == -1);
    CHECK(kronecker(12, 5) == -1);
    CHECK(kronecker(5, 0) == 0);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(3, -1) == 1);
    CHECK(kronecker(-3, -1) == -1);
    CHECK(kronecker(6, 4) == 0);
}

TEST_CASE("kronecker agrees with the definition-based oracle")
{
    for (i64 a = -200; a <= 200; ++a)
        for (i64 n = -60; n <= 300; ++n)
            REQUIRE_MESSAGE(kronecker(a, n) == oracle::kronecker(a, n), "a=" << a << " n=" << n);
}

TEST_CASE("kronecker is completely multiplicative in both arguments")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> dist(-3000, 3000);
    for (int trial = 0; trial < 2000; ++trial) {
        const i64 a = dist(rng), b = dist(rng), n = dist(rng), m = dist(rng);
        CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
        CHECK(kronecker(a, n * m) == kronecker(a, n) * kronecker(a, m));
    }
}

TEST_CASE("factorize")
{
    auto f = factorize(960);
    CHECK(f.factors == std::vector<std::pair<i64, int>>{{2, 6}, {3, 1}, {5, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(77).factors == std::vector<std::pair<i64, int>>{{7, 1}, {11, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    for (i64 n = 1; n < 5000; ++n)
        CHECK(factorize(n).product() == n);
}

TEST_CASE("square_split")
{
    auto s = square_split(12, 1920);
    CHECK(s.n1 == 12);
    CHECK(s.n2 == 1);
    CHECK(s.mu.empty());

    s = square_split(77, 1920);
    CHECK(s.n1 == 1);
    CHECK(s.n2 == 77);
    CHECK(s.mu == std::map<i64, int>{{7, 1}, {11, 1}});

    s = square_split(45, 1920);
    CHECK(s.n1 == 45);
    CHECK(s.n2 == 1);

    s = square_split(2 * 2 * 49 * 13, 32);
    CHECK(s.n1 == 4);
    CHECK(s.n2 == 49 * 13);
    CHECK(s.mu.at(7) == 2);
}

TEST_CASE("h_factor examples")
{
    // (32/11) = -1
    CHECK(kronecker(32, 11) == -1);
    CHECK(h_factor(32, 11, 1, 4) == 111);
    CHECK(h_factor(960, 7, 0, 4) == 1);
    // rank 3 with (-4/5) = 1: (25-1)/4 - (5-1)/4
    CHECK(kronecker(-4, 5) == 1);
    CHECK(h_factor(4, 5, 1, 3) == 5);
    CHECK_THROWS_AS(h_factor(960, 5, 1, 4), std::domain_error);
    CHECK_THROWS_AS(h_factor(960, 2, 1, 4), std::domain_error);
    CHECK_THROWS_AS(h_factor(960, 9, 1, 4), std::invalid_argument);
}

TEST_CASE("h_factor even rank equals the geometric closed form")
{
    std::mt19937_64 rng(11);
    const std::vector<i64> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (int trial = 0; trial < 300; ++trial) {
        const i64 p = primes[rng() % primes.size()];
        i64 dF = 16 * static_cast<i64>(1 + rng() % 500);
        if (dF % p == 0)
            dF += 16;
        if (dF % p == 0)
            continue;
        const int mu = static_cast<int>(rng() % 5);
        const int chi = oracle::kronecker(dF, p);
        // (x^{2mu+1} - 1)/(x - 1) with x = chi p
        const BigInt x = BigInt(chi * p);
        const BigInt closed = (boost::multiprecision::pow(x, 2 * mu + 1) - 1) / (x - 1);
        CHECK(h_factor(dF, p, mu, 4) == closed);
    }
}

TEST_CASE("good prime ratio examples and density cross-check")
{
    CHECK(kronecker(16, 3) == 1);
    CHECK(good_prime_ratio(16, 3, 1) == 4);
    CHECK(kronecker(48, 7) == -1);
    CHECK(good_prime_ratio(48, 7, 1) == 6);
    CHECK(good_prime_ratio(48, 7, 0) == 1);
    for (i64 dF : {16, 32, 48, 80, 960, 3072})
        for (i64 p : {3, 5, 7, 11, 13})
            if (dF % p != 0)
                for (int mu = 0; mu < 6; ++mu)
                    CHECK(BigRational(good_prime_ratio(dF, p, mu)) ==
                          good_prime_density_ratio(dF, p, mu));
}

TEST_CASE("h_factor is the ratio sum at doubled exponent")
{
    for (i64 dF : {16, 32, 960, 3072})
        for (i64 p : {3, 7, 11, 13, 17})
            if (dF % p != 0)
                for (int mu = 0; mu < 5; ++mu)
                    CHECK(h_factor(dF, p, mu, 4) == good_prime_ratio(dF, p, 2 * mu));
}
