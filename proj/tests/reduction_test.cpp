#include "doctest.h"

#include <random>

#include "qflab/reduction.hpp"

using namespace qflab;

namespace {

IntMatrix random_unimodular(std::size_t k, std::mt19937_64& rng)
{
    IntMatrix u = IntMatrix::identity(k);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int step = 0; step < 8; ++step) {
        const std::size_t i = rng() % k;
        std::size_t j = rng() % k;
        if (i == j)
            j = (j + 1) % k;
        IntMatrix e = IntMatrix::identity(k);
        e(i, j) = coef(rng);
        u = u * e;
    }
    return u;
}

// Reduction inequalities checked by brute force over small coefficient vectors.
bool satisfies_reduction_inequalities(const QuadForm& f)
{
    const std::size_t k = f.rank();
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (f.hessian(i, i) > f.hessian(i + 1, i + 1))
            return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (2 * std::abs(f.hessian(i, j)) > f.hessian(i, i))
                return false;
    std::vector<i64> v(k, -1);
    for (;;) {
        for (std::size_t idx = 0; idx < k; ++idx) {
            // v must involve some coordinate >= idx to compete with b_idx.
            bool involves = false;
            for (std::size_t j = idx; j < k; ++j)
                involves = involves || v[j] != 0;
            if (involves && f.evaluate(v) < f.hessian(idx, idx) / 2)
                return false;
        }
        std::size_t pos = 0;
        while (pos < k && v[pos] == 1)
            v[pos++] = -1;
        if (pos == k)
            break;
        ++v[pos];
    }
    return true;
}

} // namespace

TEST_CASE("minkowski_reduce examples")
{
    CHECK(minkowski_reduce(QuadForm(IntMatrix{{2, 2}, {2, 4}})).form == QuadForm::diagonal({1, 1}));
    CHECK(minkowski_reduce(QuadForm::diagonal({1, 2})).form == QuadForm::diagonal({1, 2}));
    CHECK(minkowski_reduce(QuadForm(IntMatrix{{2, 2}, {2, 6}})).form == QuadForm::diagonal({1, 2}));
}

TEST_CASE("minkowski_reduce output is reduced and equivalent")
{
    std::mt19937_64 rng(7);
    const std::vector<QuadForm> forms{
        QuadForm::diagonal({1, 2, 3, 10}),
        QuadForm::diagonal({1, 5, 5, 5}),
        QuadForm::from_gram(IntMatrix{{1, 0, 0, 0}, {0, 3, -1, 1}, {0, -1, 5, 1}, {0, 1, 1, 5}}),
        QuadForm::from_gram(IntMatrix{{3, 0, 0, 0}, {0, 3, 0, 5}, {0, 0, 10, 0}, {0, 5, 0, 25}}),
        QuadForm::diagonal({2, 7, 11}),
        QuadForm(IntMatrix{{2, 1}, {1, 2}}),
    };
    for (const auto& f : forms) {
        for (int trial = 0; trial < 15; ++trial) {
            const QuadForm g = f.sublattice(random_unimodular(f.rank(), rng));
            const Reduction r = minkowski_reduce(g);
            CHECK(g.sublattice(r.transform) == r.form);
            const i64 d = determinant(r.transform);
            CHECK((d == 1 || d == -1));
            CHECK(satisfies_reduction_inequalities(r.form));
            CHECK(is_minkowski_reduced(r.form));
        }
    }
}

TEST_CASE("is_isometric examples")
{
    CHECK(is_isometric(QuadForm::diagonal({1, 2}), QuadForm(IntMatrix{{2, 2}, {2, 6}})));
    CHECK_FALSE(is_isometric(QuadForm::diagonal({1, 1}), QuadForm::diagonal({1, 2})));
    CHECK(is_isometric(QuadForm::diagonal({1, 2, 3, 10}), QuadForm::diagonal({3, 10, 1, 2})));
    // Same discriminant and theta to 2, different classes.
    CHECK_FALSE(is_isometric(QuadForm::diagonal({1, 2, 3, 10}),
        QuadForm::from_gram(IntMatrix{{1, 0, 0, 0}, {0, 3, -1, 1}, {0, -1, 5, 1}, {0, 1, 1, 5}})));
    CHECK_FALSE(is_isometric(QuadForm::diagonal({1, 1, 3, 5}),
        QuadForm::from_gram(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 8}})));
}

TEST_CASE("find_isometry returns a witness")
{
    std::mt19937_64 rng(11);
    const auto f = QuadForm::from_gram(IntMatrix{{1, 0, 0, 0}, {0, 6, 6, 10}, {0, 6, 21, 35}, {0, 10, 35, 75}});
    for (int trial = 0; trial < 10; ++trial) {
        const QuadForm g = f.sublattice(random_unimodular(4, rng));
        const auto u = find_isometry(f, g);
        REQUIRE(u.has_value());
        CHECK(f.sublattice(*u) == g);
    }
}
