#include "qflab/paperlab.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qflab {

namespace {

// Nonzero terms of the expected leading expansions of F1, F2, F3; every other
// coefficient up to the last listed exponent is zero.
const std::array<std::vector<std::pair<i64, i64>>, 3> level120_prefixes{{
    {{2, 1}, {3, 1}, {5, 1}, {8, 1}, {12, 1}, {17, -2}, {18, -3}},
    {{3, 1}, {5, -1}, {7, -1}, {8, 1}, {10, -1}, {12, -1}, {15, 1}},
    {{7, 1}, {8, 1}, {10, 1}, {12, -1}, {15, -1}, {18, -2}, {20, -1}},
}};

} // namespace

bool ClassificationReport::pass() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ClassificationRow& r) { return r.matches(); });
}

ClassificationReport run_classification(i64 bound, ThetaSource source)
{
    ClassificationReport rep;
    rep.bound = bound;
    for (const auto& entry : lattice_data().classification)
        rep.rows.push_back({entry, is_strongly_s_regular(entry.form(), bound, source)});
    return rep;
}

bool GenusIdentitiesReport::pass() const
{
    return sturm.pass
        && std::all_of(families.begin(), families.end(), [](const IdentityReport& r) { return r.pass(); });
}

SturmComparison compare_level120_combination(const QuadForm& a, const QuadForm& b)
{
    SturmComparison cmp;
    cmp.coefficients = sturm_bound(120, 2);
    const i64 n = cmp.coefficients;
    const auto ta = theta_coeffs(a, n);
    const auto tb = theta_coeffs(b, n);
    QSeries combo = eta_quotient_expansion(level120_quotient(1), n);
    combo = series_add(combo, eta_quotient_expansion(level120_quotient(2), n));
    combo = series_sub(combo, series_scale(eta_quotient_expansion(level120_quotient(3), n), 4));
    cmp.pass = true;
    for (i64 k = 1; k <= n; ++k) {
        const i64 diff = ta[k] - tb[k];
        if (diff % 2 != 0 || diff / 2 != combo.at_exponent(k)) {
            cmp.pass = false;
            cmp.first_mismatch = k;
            break;
        }
    }
    return cmp;
}

GenusIdentitiesReport run_genus_identities(const GenusIdentityRanges& ranges)
{
    GenusIdentitiesReport rep;
    rep.families.push_back(genus_identity_check("L1", ranges.l1, ranges.linear));
    rep.families.push_back(genus_identity_check("L2", ranges.l2, ranges.linear));
    rep.families.push_back(genus_identity_check("L3", ranges.l3, ranges.linear));
    const GenusPair& l3 = lattice_data().genus_pair("L3");
    rep.sturm = compare_level120_combination(l3.primary, l3.mate);
    return rep;
}

bool QuotientCheck::pass() const
{
    return prefix_matches && !sum_mismatch && !vanishing_failure && newman.holds() && character_matches
        && is_cusp_form(cusps);
}

bool EtaQuotientReport::pass() const
{
    return std::all_of(quotients.begin(), quotients.end(), [](const QuotientCheck& q) { return q.pass(); });
}

EtaQuotientReport run_eta_quotient_checks(i64 prec)
{
    if (prec < 60)
        throw std::invalid_argument("eta quotient checks need prec >= 60");
    EtaQuotientReport rep;
    rep.prec = std::max<i64>(prec, 200);
    for (int i = 1; i <= 3; ++i) {
        QuotientCheck q;
        q.index = i;
        q.quotient = level120_quotient(i);
        const QSeries f = eta_quotient_expansion(q.quotient, rep.prec);

        const auto& terms = level120_prefixes[static_cast<std::size_t>(i - 1)];
        q.prefix_matches = true;
        for (i64 n = 0; n <= terms.back().first; ++n) {
            i64 expect = 0;
            for (const auto& [e, c] : terms)
                if (e == n)
                    expect = c;
            if (f.at_exponent(n) != expect)
                q.prefix_matches = false;
        }
        for (i64 n = 1; n <= rep.sum_range && !q.sum_mismatch; ++n)
            if (level120_coefficient(i, n) != f.at_exponent(n))
                q.sum_mismatch = n;
        for (i64 n = 1; n <= rep.prec && !q.vanishing_failure; ++n)
            if ((n % 5 == 1 || n % 5 == 4) && f.at_exponent(n) != 0)
                q.vanishing_failure = n;

        q.newman = newman_check(q.quotient);
        q.character_matches = q.newman.integral_weight;
        for (i64 m = 1; m <= 1000 && q.character_matches; ++m)
            if (std::gcd(m, i64{120}) == 1 && eta_character(q.quotient, m) != kronecker(60, m))
                q.character_matches = false;
        q.cusps = cusp_orders(q.quotient);
        if (i == 3)
            for (i64 n = 1; n <= rep.sum_range; ++n)
                if (level120_a3_b_weighted(n) != f.at_exponent(n))
                    rep.b_weighted_a3_mismatches.push_back(n);
        rep.quotients.push_back(std::move(q));
    }
    return rep;
}

} // namespace qflab
