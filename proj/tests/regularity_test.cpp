#include "doctest.h"

#include <set>

#include "qflab/reduction.hpp"
#include "qflab/regularity.hpp"
#include "qflab/transforms.hpp"

using namespace qflab;

TEST_CASE("bundled lattice data")
{
    const LatticeData& data = lattice_data();
    CHECK(data.version == 1);
    for (const auto& [name, lat] : data.lattices) {
        INFO(name);
        CHECK(lat.form.discriminant() == lat.recorded_discriminant);
    }
    std::map<std::string, int> sizes;
    int regular = 0;
    std::set<std::array<i64, 4>> distinct;
    for (const auto& e : data.classification) {
        if (e.expected_regular) {
            ++regular;
            ++sizes[e.group];
        }
        distinct.insert(e.diagonal);
    }
    CHECK(regular == 34);
    CHECK(distinct.size() == 36);
    CHECK(sizes["coprime-to-3"] == 18);
    CHECK(sizes["3-not-5"] == 14);
    CHECK(sizes["15-not-7"] == 2);
    for (const auto& e : data.classification) {
        const i64 d = e.form().discriminant();
        if (e.group == "coprime-to-3")
            CHECK(d % 3 != 0);
        if (e.group == "3-not-5")
            CHECK((d % 3 == 0 && d % 5 != 0));
        if (e.group == "15-not-7")
            CHECK((d % 15 == 0 && d % 7 != 0));
    }
    for (const auto& g : data.genus_pairs) {
        CHECK(g.primary.discriminant() == g.mate.discriminant());
        CHECK_FALSE(is_isometric(g.primary, g.mate));
    }
    CHECK_THROWS(parse_lattice_data(R"({"version":1,"classification":{"groups":[],"not_regular":[]},
        "lattices":{"A":{"gram":[[1,0],[0,1]],"dL":4},"B":{"gram":[[1,0],[0,2]],"dL":8}},
        "genus_pairs":[{"name":"x","primary":"A","mate":"B","auxiliaries":[]}]})"));
}

TEST_CASE("named sublattices match their congruence descriptions")
{
    const LatticeData& data = lattice_data();
    const QuadForm& l1 = data.lattice("L1");
    CHECK(is_isometric(congruence_sublattice(l1, CongruenceSystem(2, {{1, 0, 0, 0}, {0, 1, -1, 0}})).form,
        data.lattice("L1-even")));
    CHECK(is_isometric(congruence_sublattice(l1, CongruenceSystem(2, {{0, 1, -1, 0}})).form,
        data.lattice("L1-odd")));
    const QuadForm& l2 = data.lattice("L2");
    CHECK(is_isometric(congruence_sublattice(l2, CongruenceSystem(3, {{1, 0, 0, 0}})).form, data.lattice("L2-a")));
    CHECK(is_isometric(congruence_sublattice(l2, CongruenceSystem(3, {{1, 0, 0, 0}, {0, 1, 0, 0}})).form,
        data.lattice("L2-ab")));
}

TEST_CASE("m_s")
{
    CHECK(m_s(QuadForm::diagonal({1, 1, 1, 1}), 10) == 1);
    CHECK(m_s(QuadForm::diagonal({2, 2, 3, 10}), 10) == 2);
    CHECK(m_s(QuadForm::diagonal({2, 9, 9, 27}), 10) == 3);
    CHECK_THROWS_AS(m_s(QuadForm::diagonal({2, 9, 9, 27}), 2), std::runtime_error);
    for (const auto& e : lattice_data().classification)
        CHECK(m_s(e.form(), 5) == 1);
}

TEST_CASE("strong s-regularity examples")
{
    CHECK(is_strongly_s_regular(QuadForm::diagonal({1, 1, 1, 1}), 50).pass);
    CHECK(is_strongly_s_regular(QuadForm::diagonal({1, 2, 3, 10}), 50).pass);

    // Witnesses found by the first oracle run and cross-checked by brute force:
    // r(100) = 146 while r(4) * h_5 = 10 * 21 = 210.
    for (const auto& diag : {std::vector<i64>{1, 2, 3, 3}, std::vector<i64>{1, 3, 3, 18}}) {
        const RegularityReport r = is_strongly_s_regular(QuadForm::diagonal(diag), 50);
        CHECK_FALSE(r.pass);
        REQUIRE(r.counterexample.has_value());
        CHECK(r.counterexample->n == 10);
        CHECK(r.counterexample->n1 == 2);
        CHECK(r.counterexample->expected == 210);
        CHECK(r.counterexample->actual == 146);
    }
    CHECK_THROWS_AS(is_strongly_s_regular(QuadForm::diagonal({1, 1}), 10), std::invalid_argument);
    CHECK_THROWS_AS(is_strongly_s_regular(QuadForm::diagonal({1, 1, 1, 1}), 0), std::invalid_argument);
}

TEST_CASE("regularity report JSON")
{
    const auto pass = is_strongly_s_regular(QuadForm::diagonal({1, 1, 1, 1}), 20).to_json();
    CHECK(pass == R"({"bound":20,"dF":16,"form":"<1,1,1,1>","ms":1,"verdict":"pass","verified_up_to":20})");
    const auto fail = is_strongly_s_regular(QuadForm::diagonal({1, 2, 3, 3}), 20).to_json();
    CHECK(fail.find(R"("counterexample":{"actual":146,"expected":210,"n":10,"n1":2})") != std::string::npos);
}

TEST_CASE("table forms pass and the two exceptions fail at bound 50")
{
    for (const auto& e : lattice_data().classification) {
        INFO(e.form().to_string());
        CHECK(is_strongly_s_regular(e.form(), 50).pass == e.expected_regular);
    }
}

TEST_CASE("m_s divides every m with r(m^2) > 0")
{
    std::vector<QuadForm> forms;
    for (const auto& e : lattice_data().classification)
        if (e.expected_regular)
            forms.push_back(e.form());
    forms.push_back(QuadForm::diagonal({2, 9, 9, 27}));
    for (const auto& f : forms) {
        RepresentationCounter c(f);
        const i64 ms = m_s(c, 50);
        for (i64 m = 1; m <= 50; ++m)
            if (c.count(m * m) > 0)
                CHECK(m % ms == 0);
    }
}

TEST_CASE("descent through lambda_q")
{
    // L_3 = <2> + 3^2 <1, 1> + 3^3 <1>; lambda_3(L) = <1,1,2,3>.
    const auto l = QuadForm::diagonal({2, 9, 9, 27});
    const QuadForm lam = lambda_transform(l, 3);
    CHECK(is_isometric(lam, QuadForm::diagonal({1, 1, 2, 3})));
    const auto tl = theta_coeffs(l, 9 * 500);
    const auto tm = theta_coeffs(lam, 500);
    for (i64 n = 0; n <= 500; ++n)
        REQUIRE(tl[9 * n] == tm[n]);
    CHECK(m_s(l, 10) == 3 * m_s(lam, 10));
    CHECK(is_strongly_s_regular(l, 90).pass == is_strongly_s_regular(lam, 30).pass);
    CHECK(is_strongly_s_regular(l, 90).pass);

    const auto l5 = QuadForm::diagonal({2, 25, 25, 125});
    const QuadForm lam5 = lambda_transform(l5, 5);
    CHECK(is_isometric(lam5, QuadForm::diagonal({1, 1, 2, 5})));
    CHECK(is_strongly_s_regular(l5, 100).pass == is_strongly_s_regular(lam5, 20).pass);
}

TEST_CASE("indistinguishability by squares")
{
    for (const auto& pair : lattice_data().genus_pairs) {
        const auto full = check_indistinguishable(pair, 100, false);
        const auto restricted = check_indistinguishable(pair, 100, true);
        CHECK(full.pass);
        CHECK(full.checked == 100);
        CHECK(restricted.pass == full.pass);
        CHECK(restricted.checked < full.checked);
    }
    const auto l = QuadForm::diagonal({1, 2, 3, 3});
    CHECK(check_indistinguishable(GenusPair{"self", l, l, {}}, 50, false).pass);
}

TEST_CASE("square recursion at good primes")
{
    const std::vector<std::pair<std::vector<i64>, i64>> cases{
        {{1, 1, 1, 1}, 3}, {{1, 1, 1, 2}, 5}, {{1, 2, 3, 10}, 7}};
    for (const auto& [diag, p] : cases) {
        const auto rep = hecke_square_recursion_check(QuadForm::diagonal(diag), p, 30);
        CHECK(rep.pass);
        // The recursion without the character term does not hold for p !| n.
        CHECK(rep.literal_mismatches > 0);
    }
    CHECK_THROWS_AS(hecke_square_recursion_check(QuadForm::diagonal({1, 1, 1, 3}), 3, 10), std::domain_error);
    CHECK_THROWS_AS(hecke_square_recursion_check(QuadForm::diagonal({1, 1, 1, 1}), 2, 10), std::invalid_argument);
}

TEST_CASE("genus identities")
{
    const std::vector<std::pair<std::string, i64>> cases{{"L1", 200}, {"L2", 50}, {"L3", 30}};
    for (const auto& [family, n_max] : cases) {
        const IdentityReport rep = genus_identity_check(family, n_max, 200);
        CHECK(rep.pass());
        for (const auto& i : rep.identities) {
            INFO(family << ": " << i.name);
            CHECK(i.pass);
        }
    }
    CHECK_THROWS_AS(genus_identity_check("L4", 10, 10), std::out_of_range);
}
