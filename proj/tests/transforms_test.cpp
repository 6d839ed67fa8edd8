#include "doctest.h"

#include "qflab/arith.hpp"
#include "qflab/enumerate.hpp"
#include "qflab/reduction.hpp"
#include "qflab/transforms.hpp"

using namespace qflab;

TEST_CASE("congruence_sublattice examples")
{
    const auto l1 = QuadForm::diagonal({1, 2, 6, 16});
    const Sublattice s = congruence_sublattice(l1, CongruenceSystem(2, {{1, 0, 0, 0}, {0, 1, -1, 0}}));
    CHECK(s.index == 4);
    CHECK(s.form.discriminant() == l1.discriminant() * 16);
    CHECK(is_isometric(s.form,
        QuadForm::from_gram(IntMatrix{{4, 0, 0, 0}, {0, 8, 4, 0}, {0, 4, 8, 0}, {0, 0, 0, 16}})));
    CHECK(l1.sublattice(s.basis) == s.form);

    CHECK(congruence_sublattice(l1, CongruenceSystem(2, {})).form == l1);

    const auto l2 = QuadForm::diagonal({1, 1, 3, 5});
    const Sublattice t = congruence_sublattice(l2, CongruenceSystem(3, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(t.index == 9);
    CHECK(is_isometric(t.form, QuadForm::diagonal({3, 5, 9, 9})));
}

TEST_CASE("congruence_sublattice index and discriminant")
{
    const auto f = QuadForm::from_gram(IntMatrix{{1, 0, 0, 0}, {0, 3, -1, 1}, {0, -1, 5, 1}, {0, 1, 1, 5}});
    const std::vector<CongruenceSystem> systems{
        CongruenceSystem(2, {{1, 1, 0, 0}}),
        CongruenceSystem(3, {{1, 2, 0, 1}, {0, 0, 1, 1}}),
        CongruenceSystem(4, {{2, 0, 0, 0}}),
        CongruenceSystem(6, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
    };
    const std::vector<i64> expected_index{2, 9, 2, 1296};
    for (std::size_t i = 0; i < systems.size(); ++i) {
        const Sublattice s = congruence_sublattice(f, systems[i]);
        CHECK(s.index == expected_index[i]);
        CHECK(s.form.discriminant() == f.discriminant() * s.index * s.index);
    }
}

TEST_CASE("lambda_transform examples")
{
    CHECK(is_isometric(lambda_transform(QuadForm::diagonal({1, 3, 3, 9}), 3), QuadForm::diagonal({1, 1, 3, 3})));
    CHECK(lambda_transform(QuadForm::diagonal({1, 1, 1, 1}), 3) == QuadForm::diagonal({1, 1, 1, 1}));
    CHECK(lambda_composite(QuadForm::diagonal({1, 2, 3, 10}), 1) == QuadForm::diagonal({1, 2, 3, 10}));
    CHECK(is_isometric(lambda_composite(QuadForm::diagonal({1, 3, 3, 9}), 3), QuadForm::diagonal({1, 1, 3, 3})));
    CHECK(is_isometric(lambda_composite(QuadForm::diagonal({1, 3, 3, 9}), 9),
        lambda_transform(lambda_transform(QuadForm::diagonal({1, 3, 3, 9}), 3), 3)));
}

TEST_CASE("Watson sublattice at 2 keeps the parity condition")
{
    // <1,1,1,1>: Hx = 2x is always 0 mod 2, so only Q(x) even remains (the D4 lattice).
    const Sublattice s = watson_sublattice(QuadForm::diagonal({1, 1, 1, 1}), 2);
    CHECK(s.index == 2);
    const auto theta = theta_coeffs(s.form, 6);
    for (i64 n = 1; n <= 6; n += 2)
        CHECK(theta[n] == 0);
    CHECK(theta[2] == 24);
}

TEST_CASE("lambda maps commute for distinct primes")
{
    const std::vector<QuadForm> sample{
        QuadForm::diagonal({1, 2, 3, 10}),
        QuadForm::diagonal({1, 3, 3, 9}),
        QuadForm::diagonal({1, 5, 5, 5}),
        QuadForm::diagonal({1, 2, 6, 16}),
        QuadForm::diagonal({3, 5, 9, 45}),
    };
    const std::vector<std::pair<i64, i64>> primes{{2, 3}, {3, 5}, {2, 5}};
    for (const auto& f : sample)
        for (const auto& [p, q] : primes)
            CHECK(is_isometric(lambda_transform(lambda_transform(f, p), q),
                lambda_transform(lambda_transform(f, q), p)));
}

TEST_CASE("jordan_symbol_odd examples")
{
    const auto j = jordan_symbol_odd(QuadForm::diagonal({1, 3, 3, 9}), 3);
    REQUIRE(j.blocks.size() == 3);
    CHECK(j.blocks[0].scale == 0);
    CHECK(j.blocks[0].unit_classes == std::vector<int>{1});
    CHECK(j.blocks[1].scale == 1);
    CHECK(j.blocks[1].unit_classes == std::vector<int>{1, 1});
    CHECK(j.blocks[2].scale == 2);
    CHECK(j.blocks[2].unit_classes == std::vector<int>{1});
    CHECK(j.unimodular_part_anisotropic());

    const auto j2 = jordan_symbol_odd(QuadForm::diagonal({1, 2}), 3);
    CHECK(j2.unimodular_rank() == 2);
    CHECK_FALSE(j2.unimodular_part_anisotropic());

    const auto j3 = jordan_symbol_odd(QuadForm::diagonal({1, 1, 3}), 3);
    CHECK(j3.unimodular_rank() == 2);
    CHECK(j3.unimodular_part_anisotropic());

    CHECK_THROWS_AS(jordan_symbol_odd(QuadForm::diagonal({1, 1}), 2), std::invalid_argument);
}

TEST_CASE("jordan_symbol_odd handles non-diagonal forms")
{
    // x^2 + xy + y^2 has discriminant 3: unit part rank 1 at p = 3.
    const auto j = jordan_symbol_odd(QuadForm(IntMatrix{{2, 1}, {1, 2}}), 3);
    CHECK(j.unimodular_rank() == 1);
    REQUIRE(j.block(1) != nullptr);
    CHECK(j.block(1)->unit_classes.size() == 1);
    // Determinant of the local diagonalization tracks the discriminant's square class.
    const auto mate = QuadForm::from_gram(IntMatrix{{3, -1, 1}, {-1, 5, 1}, {1, 1, 5}});
    const auto jm = jordan_symbol_odd(mate, 5);
    std::size_t total = 0;
    for (const auto& b : jm.blocks)
        total += b.unit_classes.size();
    CHECK(total == 3);
}

TEST_CASE("Watson identity for anisotropic unimodular part")
{
    const std::vector<std::pair<QuadForm, i64>> sample{
        {QuadForm::diagonal({1, 1, 3, 3}), 3},
        {QuadForm::diagonal({1, 2, 5, 10}), 5},
        {QuadForm::diagonal({1, 3, 3, 9}), 3},
        {QuadForm::diagonal({1, 1, 7, 7}), 7},
    };
    for (const auto& [f, p] : sample) {
        REQUIRE(jordan_symbol_odd(f, p).unimodular_part_anisotropic());
        const Sublattice lam = watson_sublattice(f, p);
        const i64 n_max = 500;
        const auto a = theta_coeffs(f, p * n_max);
        const auto b = theta_coeffs(lam.form, p * n_max);
        for (i64 n = 1; n <= n_max; ++n)
            REQUIRE(a[p * n] == b[p * n]);
    }
}

TEST_CASE("gamma_sublattices")
{
    const std::vector<std::pair<QuadForm, i64>> sample{
        {QuadForm::diagonal({1, 2, 3}), 3},
        {QuadForm::diagonal({1, 1, 5}), 5},
        {QuadForm::diagonal({1, 2, 9}), 3},
        {QuadForm::diagonal({1, 1, 13}), 13},
    };
    for (const auto& [f, p] : sample) {
        const GammaPair g = gamma_sublattices(f, p);
        CHECK(g.first.index == p);
        CHECK(g.second.index == p);
        CHECK(g.first.form.discriminant() == f.discriminant() * p * p);
        CHECK(g.first.form.norm_gcd() % p == 0);
        CHECK(g.second.form.norm_gcd() % p == 0);
        CHECK(index_p_sublattices_with_norm_in_p(f, p).size() == 2);

        const Sublattice lam = watson_sublattice(f, p);
        const i64 n_max = 500;
        const auto t = theta_coeffs(f, p * n_max);
        const auto t1 = theta_coeffs(g.first.form, p * n_max);
        const auto t2 = theta_coeffs(g.second.form, p * n_max);
        const auto tl = theta_coeffs(lam.form, p * n_max);
        for (i64 n = 1; n <= n_max; ++n)
            REQUIRE(t[p * n] == t1[p * n] + t2[p * n] - tl[p * n]);
    }
    CHECK_THROWS_AS(gamma_sublattices(QuadForm::diagonal({1, 1, 3}), 3), std::domain_error);
    CHECK_THROWS_AS(gamma_sublattices(QuadForm::diagonal({1, 2, 3}), 5), std::domain_error);
    CHECK_THROWS_AS(gamma_sublattices(QuadForm::diagonal({1, 2, 3, 4}), 3), std::invalid_argument);
}
