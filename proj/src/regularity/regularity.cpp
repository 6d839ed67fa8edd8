#include "qflab/regularity.hpp"

#include <functional>
#include <stdexcept>

#include "json.hpp"
#include "qflab/transforms.hpp"

namespace qflab {

namespace {

nlohmann::json big_to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max())
        return static_cast<i64>(v);
    return v.str();
}

bool primes_divide(i64 n, i64 d)
{
    for (const auto& [p, e] : factorize(n).factors)
        if (d % p != 0)
            return false;
    return true;
}

using Check = std::function<std::pair<i64, i64>(i64)>;

IdentityResult run_identity(std::string name, i64 from, i64 through, const Check& check,
    const std::function<bool(i64)>& admissible = {})
{
    IdentityResult r;
    r.name = std::move(name);
    r.checked_through = through;
    r.pass = true;
    for (i64 n = from; n <= through; ++n) {
        if (admissible && !admissible(n))
            continue;
        const auto [lhs, rhs] = check(n);
        if (lhs != rhs) {
            r.pass = false;
            r.n = n;
            r.lhs = lhs;
            r.rhs = rhs;
            break;
        }
    }
    return r;
}

i64 lin(i64 a, i64 x, i64 b, i64 y)
{
    return checked_add(checked_mul(a, x), checked_mul(b, y));
}

} // namespace

i64 m_s(RepresentationCounter& counter, i64 cap)
{
    if (cap < 1)
        throw std::invalid_argument("m_s cap must be positive");
    for (i64 n = 1; n <= cap; ++n)
        if (counter.count(checked_mul(n, n)) > 0)
            return n;
    throw std::runtime_error("no square up to " + std::to_string(cap) + "^2 is represented");
}

i64 m_s(const QuadForm& form, i64 cap)
{
    RepresentationCounter counter(form);
    return m_s(counter, cap);
}

RegularityReport is_strongly_s_regular(const QuadForm& form, i64 bound, ThetaSource source)
{
    RepresentationCounter counter(form, std::move(source));
    return is_strongly_s_regular(counter, bound);
}

RegularityReport is_strongly_s_regular(RepresentationCounter& counter, i64 bound)
{
    const QuadForm& form = counter.form();
    if (bound < 1)
        throw std::invalid_argument("regularity bound must be positive");
    const int rank = static_cast<int>(form.rank());
    if (rank < 3)
        throw std::invalid_argument("strong s-regularity is checked for rank 3 and 4 only");
    const i64 d = form.discriminant();

    RegularityReport rep{form, bound, std::nullopt, true, std::nullopt};
    for (i64 n = 1; n <= bound; ++n) {
        const SquareSplit split = square_split(n, checked_mul(2, d));
        if (split.n2 == 1)
            continue;
        BigInt expected = counter.count(checked_mul(split.n1, split.n1));
        for (const auto& [p, mu] : split.mu)
            expected *= h_factor(d, p, mu, rank);
        const i64 actual = counter.count(checked_mul(n, n));
        if (expected != actual) {
            rep.pass = false;
            rep.counterexample = Counterexample{n, split.n1, expected, actual};
            break;
        }
    }
    try {
        rep.ms = m_s(counter, bound);
    } catch (const std::runtime_error&) {
        rep.ms.reset();
    }
    return rep;
}

std::string RegularityReport::to_json() const
{
    nlohmann::json j;
    j["form"] = form.to_string();
    j["dF"] = form.discriminant();
    j["ms"] = ms ? nlohmann::json(*ms) : nlohmann::json(nullptr);
    j["bound"] = bound;
    j["verdict"] = pass ? "pass" : "fail";
    if (pass)
        j["verified_up_to"] = bound;
    if (counterexample) {
        j["counterexample"] = {{"n", counterexample->n}, {"n1", counterexample->n1},
            {"expected", big_to_json(counterexample->expected)}, {"actual", counterexample->actual}};
    }
    return j.dump();
}

IndistinguishabilityReport check_indistinguishable(const GenusPair& pair, i64 bound, bool restricted)
{
    if (bound < 1)
        throw std::invalid_argument("bound must be positive");
    RepresentationCounter a(pair.primary), b(pair.mate);
    IndistinguishabilityReport rep;
    rep.pair = pair.name;
    rep.bound = bound;
    rep.restricted = restricted;
    rep.pass = true;
    const i64 d = pair.primary.discriminant();
    for (i64 n = 1; n <= bound; ++n) {
        if (restricted && !primes_divide(n, d))
            continue;
        ++rep.checked;
        const i64 n2 = checked_mul(n, n);
        const i64 ra = a.count(n2), rb = b.count(n2);
        if (ra != rb) {
            rep.pass = false;
            rep.n = n;
            rep.primary_count = ra;
            rep.mate_count = rb;
            break;
        }
    }
    return rep;
}

HeckeReport hecke_square_recursion_check(const QuadForm& form, i64 p, i64 bound)
{
    if (form.rank() != 4)
        throw std::invalid_argument("square recursion is stated for quaternary forms");
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("square recursion needs an odd prime");
    if (form.discriminant() % p == 0)
        throw std::domain_error("prime divides the discriminant");
    RepresentationCounter counter(form);
    HeckeReport rep{form, p, bound, true, std::nullopt, 0, 0, 0};
    const i64 chi = kronecker(form.discriminant(), p);
    const i64 p2 = p * p;
    for (i64 n = 1; n <= bound; ++n) {
        const i64 rn = counter.count(checked_mul(n, n));
        const i64 lhs = counter.count(checked_mul(p2, checked_mul(n, n)));
        i64 literal = checked_mul(p2 + 1, rn);
        if (n % p == 0)
            literal = checked_sub(literal, checked_mul(p2, counter.count((n / p) * (n / p))));
        const i64 rhs = n % p == 0 ? literal : checked_mul(p2 + chi * p + 1, rn);
        if (literal != lhs)
            ++rep.literal_mismatches;
        if (rep.pass && lhs != rhs) {
            rep.pass = false;
            rep.first_failure = n;
            rep.lhs = lhs;
            rep.rhs = rhs;
        }
    }
    return rep;
}

bool IdentityReport::pass() const
{
    for (const auto& i : identities)
        if (!i.pass)
            return false;
    return true;
}

IdentityReport genus_identity_check(const std::string& family, i64 n_max, i64 linear_max)
{
    if (n_max < 0 || linear_max < 0)
        throw std::invalid_argument("identity ranges must be nonnegative");
    const LatticeData& data = lattice_data();
    const GenusPair& pair = data.genus_pair(family);
    IdentityReport rep;
    rep.family = family;
    auto& out = rep.identities;

    if (family == "L1") {
        const i64 top = checked_add(checked_mul(4, n_max), 1);
        const auto l = theta_coeffs(pair.primary, top);
        const auto lp = theta_coeffs(pair.mate, top);
        const auto even = theta_coeffs(pair.auxiliaries.at("L1-even"), top);
        const auto odd = theta_coeffs(pair.auxiliaries.at("L1-odd"), top);
        const Sublattice sub = congruence_sublattice(pair.primary, CongruenceSystem(2, {{1, 0, 0, 0}, {0, 1, -1, 0}}));
        const auto cong = theta_coeffs(sub.form, top);
        auto at = [](const std::vector<i64>& t, i64 i) { return t[static_cast<std::size_t>(i)]; };
        out.push_back(run_identity("r(4n, L1) = r(4n, x1 and x2-x3 even)", 0, n_max,
            [&](i64 n) { return std::pair{at(l, 4 * n), at(cong, 4 * n)}; }));
        out.push_back(run_identity("r(4n, L1) = r(4n, L1-even)", 0, n_max,
            [&](i64 n) { return std::pair{at(l, 4 * n), at(even, 4 * n)}; }));
        out.push_back(run_identity("r(4n, L1') = r(4n, L1-even)", 0, n_max,
            [&](i64 n) { return std::pair{at(lp, 4 * n), at(even, 4 * n)}; }));
        out.push_back(run_identity("r(4n+1, L1) = r(4n+1, L1-odd)", 0, n_max,
            [&](i64 n) { return std::pair{at(l, 4 * n + 1), at(odd, 4 * n + 1)}; }));
        out.push_back(run_identity("r(4n+1, L1') = r(4n+1, L1-odd)", 0, n_max,
            [&](i64 n) { return std::pair{at(lp, 4 * n + 1), at(odd, 4 * n + 1)}; }));
        out.push_back(run_identity("r(4n, L1) = r(4n, L1')", 0, n_max,
            [&](i64 n) { return std::pair{at(l, 4 * n), at(lp, 4 * n)}; }));
        out.push_back(run_identity("r(4n+1, L1) = r(4n+1, L1')", 0, n_max,
            [&](i64 n) { return std::pair{at(l, 4 * n + 1), at(lp, 4 * n + 1)}; }));
        return rep;
    }

    if (family == "L2") {
        const i64 top = checked_add(checked_mul(3, n_max), 1);
        const auto l = theta_coeffs(pair.primary, top);
        const auto lp = theta_coeffs(pair.mate, top);
        const auto k = theta_coeffs(pair.auxiliaries.at("K"), top);
        auto at = [](const std::vector<i64>& t, i64 i) { return t[static_cast<std::size_t>(i)]; };
        out.push_back(run_identity("r(3n+1, L2) = 2 r(3n+1, K)", 0, n_max,
            [&](i64 n) { return std::pair{at(l, 3 * n + 1), 2 * at(k, 3 * n + 1)}; }));
        out.push_back(run_identity("r(3n+1, L2') = 2 r(3n+1, K)", 0, n_max,
            [&](i64 n) { return std::pair{at(lp, 3 * n + 1), 2 * at(k, 3 * n + 1)}; }));

        RepresentationCounter cl(pair.primary), clp(pair.mate), ct(pair.auxiliaries.at("T")),
            ca(pair.auxiliaries.at("L2-a")), cab(pair.auxiliaries.at("L2-ab")),
            cas(pair.auxiliaries.at("L2-a-sub"));
        auto sq9 = [](i64 n) { return checked_mul(9, checked_mul(n, n)); };
        out.push_back(run_identity("r(9n^2, L2) = 2 r(9n^2, L2-a) - r(9n^2, L2-ab)", 0, n_max, [&](i64 n) {
            return std::pair{cl.count(sq9(n)), lin(2, ca.count(sq9(n)), -1, cab.count(sq9(n)))};
        }));
        out.push_back(run_identity("r(9n^2, L2-ab) = r(n^2, L2)", 0, n_max,
            [&](i64 n) { return std::pair{cab.count(sq9(n)), cl.count(n * n)}; }));
        out.push_back(run_identity("r(9n^2, L2-a) = 2 r(9n^2, T) - r(9n^2, L2-a-sub)", 0, n_max, [&](i64 n) {
            return std::pair{ca.count(sq9(n)), lin(2, ct.count(sq9(n)), -1, cas.count(sq9(n)))};
        }));
        out.push_back(run_identity("r(9n^2, L2-a-sub) = r(n^2, L2)", 0, n_max,
            [&](i64 n) { return std::pair{cas.count(sq9(n)), cl.count(n * n)}; }));
        out.push_back(run_identity("r(9n^2, L2) = 4 r(9n^2, T) - 3 r(n^2, L2)", 0, n_max, [&](i64 n) {
            return std::pair{cl.count(sq9(n)), lin(4, ct.count(sq9(n)), -3, cl.count(n * n))};
        }));
        out.push_back(run_identity("r(9n^2, L2') = 4 r(9n^2, T) - 3 r(n^2, L2')", 0, n_max, [&](i64 n) {
            return std::pair{clp.count(sq9(n)), lin(4, ct.count(sq9(n)), -3, clp.count(n * n))};
        }));
        out.push_back(run_identity("r(n^2, L2) = r(n^2, L2')", 0, 2 * n_max,
            [&](i64 n) { return std::pair{cl.count(n * n), clp.count(n * n)}; }));
        return rep;
    }

    if (family == "L3") {
        RepresentationCounter cl(pair.primary), clp(pair.mate), cm(pair.auxiliaries.at("M")),
            cn(pair.auxiliaries.at("N")), ck1(pair.auxiliaries.at("K1")), ck2(pair.auxiliaries.at("K2"));
        auto sq = [](i64 c, i64 n) { return checked_mul(c, checked_mul(n, n)); };
        out.push_back(run_identity("r(25n^2, L3) = 2 r(5n^2, M) + 2 r(25n^2, K1) - 3 r(n^2, L3)", 0, n_max,
            [&](i64 n) {
                const i64 rhs = checked_add(lin(2, cm.count(sq(5, n)), 2, ck1.count(sq(25, n))),
                    checked_mul(-3, cl.count(n * n)));
                return std::pair{cl.count(sq(25, n)), rhs};
            }));
        out.push_back(run_identity("r(25n^2, K1) = 2 r(5n^2, N) - r(n^2, L3)", 0, n_max, [&](i64 n) {
            return std::pair{ck1.count(sq(25, n)), lin(2, cn.count(sq(5, n)), -1, cl.count(n * n))};
        }));
        out.push_back(run_identity("r(25n^2, L3') = 2 r(5n^2, M) + 2 r(25n^2, K2) - 3 r(n^2, L3')", 0, n_max,
            [&](i64 n) {
                const i64 rhs = checked_add(lin(2, cm.count(sq(5, n)), 2, ck2.count(sq(25, n))),
                    checked_mul(-3, clp.count(n * n)));
                return std::pair{clp.count(sq(25, n)), rhs};
            }));
        out.push_back(run_identity("r(25n^2, K2) = 2 r(5n^2, N) - r(n^2, L3')", 0, n_max, [&](i64 n) {
            return std::pair{ck2.count(sq(25, n)), lin(2, cn.count(sq(5, n)), -1, clp.count(n * n))};
        }));
        out.push_back(run_identity("r(25n^2, L3) = 2 r(5n^2, M) + 4 r(5n^2, N) - 5 r(n^2, L3)", 0, n_max,
            [&](i64 n) {
                const i64 rhs = checked_add(lin(2, cm.count(sq(5, n)), 4, cn.count(sq(5, n))),
                    checked_mul(-5, cl.count(n * n)));
                return std::pair{cl.count(sq(25, n)), rhs};
            }));
        out.push_back(run_identity("r(25n^2, L3') = 2 r(5n^2, M) + 4 r(5n^2, N) - 5 r(n^2, L3')", 0, n_max,
            [&](i64 n) {
                const i64 rhs = checked_add(lin(2, cm.count(sq(5, n)), 4, cn.count(sq(5, n))),
                    checked_mul(-5, clp.count(n * n)));
                return std::pair{clp.count(sq(25, n)), rhs};
            }));
        const auto l = theta_coeffs(pair.primary, linear_max);
        const auto lp = theta_coeffs(pair.mate, linear_max);
        out.push_back(run_identity("r(n, L3) = r(n, L3') for n = 1, 4 mod 5", 1, linear_max,
            [&](i64 n) { return std::pair{l[n], lp[n]}; },
            [](i64 n) { return n % 5 == 1 || n % 5 == 4; }));
        return rep;
    }
    throw std::invalid_argument("unknown genus family " + family);
}

} // namespace qflab
