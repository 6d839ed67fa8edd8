#include "qflab/eta.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qflab {

namespace {

std::vector<i64> divisors(i64 n)
{
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d * d != n)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

i64 divisor_character_sum_mod3(i64 n)
{
    i64 s = 0;
    for (i64 d : divisors(n))
        s += kronecker(d, 3);
    return s;
}

i64 exact_div(i64 a, i64 b, const char* what)
{
    if (a % b != 0)
        throw std::logic_error(std::string(what) + ": lattice sum not divisible by normalization");
    return a / b;
}

IdentityCheck compare(std::string name, const QSeries& product, const std::vector<i64>& twice_sum,
    bool halve, i64 prec)
{
    IdentityCheck check;
    check.name = std::move(name);
    check.checked_through = prec;
    const i64 last = 24 * prec;
    for (i64 i = 0; i <= last; ++i) {
        i64 expected = twice_sum[static_cast<std::size_t>(i)];
        if (halve) {
            if (expected % 2 != 0) {
                check.first_mismatch = i;
                break;
            }
            expected /= 2;
        }
        if (product[i] != expected) {
            check.first_mismatch = i;
            break;
        }
    }
    check.passed = !check.first_mismatch;
    return check;
}

} // namespace

EtaQuotient::EtaQuotient(i64 level_, std::vector<std::pair<i64, i64>> exponents_)
    : level(level_), exponents(std::move(exponents_))
{
    if (level < 1)
        throw std::invalid_argument("eta quotient level must be positive");
    for (const auto& [delta, r] : exponents) {
        if (delta < 1 || level % delta != 0)
            throw std::invalid_argument("eta quotient scale " + std::to_string(delta) + " does not divide the level");
        if (r == 0)
            throw std::invalid_argument("eta quotient exponents must be nonzero");
    }
}

BigRational EtaQuotient::weight() const
{
    i64 s = 0;
    for (const auto& e : exponents)
        s = checked_add(s, e.second);
    return BigRational(s, 2);
}

BigInt EtaQuotient::character_discriminant() const
{
    BigInt s = 1;
    for (const auto& [delta, r] : exponents)
        s *= boost::multiprecision::pow(BigInt(delta), static_cast<unsigned>(std::llabs(r)));
    return s;
}

i64 EtaQuotient::order_at_infinity_24() const
{
    i64 s = 0;
    for (const auto& [delta, r] : exponents)
        s = checked_add(s, checked_mul(delta, r));
    return s;
}

std::string EtaQuotient::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        out << (i ? "," : "") << exponents[i].first << ':' << exponents[i].second;
    return out.str();
}

EtaQuotient parse_eta_quotient(std::string_view text, i64 level)
{
    std::vector<std::pair<i64, i64>> exps;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("eta factor '" + item + "' is not of the form delta:r");
        std::size_t used1 = 0, used2 = 0;
        const std::string ds = item.substr(0, colon), rs = item.substr(colon + 1);
        i64 delta = 0, r = 0;
        try {
            delta = std::stoll(ds, &used1);
            r = std::stoll(rs, &used2);
        } catch (const std::exception&) {
            throw std::invalid_argument("eta factor '" + item + "' is not of the form delta:r");
        }
        if (used1 != ds.size() || used2 != rs.size())
            throw std::invalid_argument("eta factor '" + item + "' is not of the form delta:r");
        exps.emplace_back(delta, r);
    }
    return EtaQuotient(level, std::move(exps));
}

QSeries euler_product(const std::vector<std::pair<i64, i64>>& factors, i64 upto)
{
    if (upto < 0)
        return QSeries(1, 0, {});
    const auto size = static_cast<std::size_t>(upto + 1);
    // f = prod_m (1 - q^m)^{c(m)}; q f'/f = -sum_k s(k) q^k with s(k) = sum_{m | k} m c(m).
    std::vector<i64> c(size, 0), s(size, 0);
    for (const auto& [delta, r] : factors) {
        if (delta < 1)
            throw std::invalid_argument("eta scale must be positive");
        for (i64 m = delta; m <= upto; m += delta)
            c[m] = checked_add(c[m], r);
    }
    for (i64 m = 1; m <= upto; ++m)
        if (c[m] != 0)
            for (i64 k = m; k <= upto; k += m)
                s[k] = checked_add(s[k], checked_mul(m, c[m]));
    std::vector<i64> a(size, 0);
    a[0] = 1;
    for (i64 n = 1; n <= upto; ++n) {
        i128 acc = 0;
        for (i64 k = 1; k <= n; ++k)
            if (s[k] != 0 && a[n - k] != 0) {
                const i128 term = static_cast<i128>(s[k]) * a[n - k];
                if (__builtin_add_overflow(acc, term, &acc))
                    throw OverflowError("eta product coefficient overflow");
            }
        if (acc % n != 0)
            throw std::logic_error("eta product recurrence produced a non-integer");
        a[n] = narrow(-acc / n);
    }
    return QSeries(1, 0, std::move(a));
}

QSeries euler_product_power(i64 scale, i64 power, i64 upto)
{
    return euler_product({{scale, power}}, upto);
}

QSeries eta_product_expansion(const std::vector<std::pair<i64, i64>>& factors, i64 prec)
{
    if (prec < 0)
        throw std::invalid_argument("precision must be nonnegative");
    i64 lead = 0;
    for (const auto& [delta, r] : factors)
        lead = checked_add(lead, checked_mul(delta, r));
    const i64 upto = floor_div(prec - lead, 24);
    if (upto < 0)
        return QSeries(24, prec + 1, {});
    return truncate(shift(regrade(euler_product(factors, upto), 24), lead), prec);
}

QSeries eta_expansion(i64 scale, i64 power, i64 prec)
{
    return eta_product_expansion({{scale, power}}, prec);
}

QSeries eta_quotient_expansion(const EtaQuotient& eq, i64 prec)
{
    if (prec <= 0)
        throw std::invalid_argument("precision must be positive");
    const i64 s = eq.order_at_infinity_24();
    if (s % 24 == 0)
        return shift(euler_product(eq.exponents, prec - s / 24), s / 24);
    return eta_product_expansion(eq.exponents, checked_mul(24, prec));
}

NewmanReport newman_check(const EtaQuotient& eq)
{
    NewmanReport rep;
    rep.weight = eq.weight();
    rep.character_discriminant = eq.character_discriminant();
    rep.integral_weight = denominator(rep.weight) == 1;
    i64 b = 0;
    for (const auto& [delta, r] : eq.exponents)
        b = checked_add(b, checked_mul(eq.level / delta, r));
    rep.cond24a = eq.order_at_infinity_24() % 24 == 0;
    rep.cond24b = b % 24 == 0;
    return rep;
}

int eta_character(const EtaQuotient& eq, i64 m)
{
    const BigRational k = eq.weight();
    if (denominator(k) != 1)
        throw std::domain_error("character is defined for integral weight only");
    int value = (numerator(k) % 2 == 0) ? kronecker(1, m) : kronecker(-1, m);
    for (const auto& [delta, r] : eq.exponents)
        if (std::llabs(r) % 2 == 1)
            value *= kronecker(delta, m);
        else if (std::gcd(delta, m) != 1)
            value = 0;
    return value;
}

std::vector<CuspOrder> cusp_orders(const EtaQuotient& eq)
{
    std::vector<CuspOrder> out;
    const i64 n = eq.level;
    for (i64 d : divisors(n)) {
        BigRational sum = 0;
        for (const auto& [delta, r] : eq.exponents) {
            const i64 g = std::gcd(d, delta);
            sum += BigRational(BigInt(g) * g * r, BigInt(std::gcd(d, n / d)) * d * delta);
        }
        out.push_back({d, sum * BigRational(n, 24)});
    }
    return out;
}

bool is_holomorphic(const std::vector<CuspOrder>& orders)
{
    for (const auto& c : orders)
        if (c.order < 0)
            return false;
    return true;
}

bool is_cusp_form(const std::vector<CuspOrder>& orders)
{
    for (const auto& c : orders)
        if (c.order <= 0)
            return false;
    return true;
}

i64 gamma0_index(i64 n)
{
    if (n < 1)
        throw std::invalid_argument("level must be positive");
    i64 index = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        index = checked_mul(index, p + 1);
        for (int i = 1; i < e; ++i)
            index = checked_mul(index, p);
    }
    return index;
}

i64 sturm_bound(i64 n, i64 k)
{
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("Sturm bound needs an even weight k >= 2");
    return ceil_div(checked_mul(k, gamma0_index(n)), 12);
}

std::vector<IdentityCheck> unary_theta_identities(i64 prec)
{
    if (prec < 24)
        throw std::invalid_argument("identity precision must be at least 24");
    const i64 last = checked_mul(24, prec);
    const auto size = static_cast<std::size_t>(last + 1);
    const i64 nmax = static_cast<i64>(isqrt(last)) + 1;
    std::vector<IdentityCheck> out;

    {
        std::vector<i64> sum(size, 0);
        for (i64 n = -nmax; n <= nmax; ++n)
            if (n * n <= last)
                sum[n * n] += kronecker(12, n);
        out.push_back(compare("eta(z)", eta_expansion(1, 1, last), sum, true, prec));
    }
    {
        std::vector<i64> sum(size, 0);
        for (i64 n = -nmax; n <= nmax; ++n)
            if (3 * n * n <= last)
                sum[3 * n * n] += kronecker(4, n);
        const QSeries prod = eta_product_expansion({{2, 2}, {1, -1}}, last);
        out.push_back(compare("eta(2z)^2/eta(z)", prod, sum, true, prec));
    }
    {
        std::vector<i64> sum(size, 0);
        for (i64 n = -nmax; n <= nmax; ++n)
            if (3 * n * n <= last)
                sum[3 * n * n] += kronecker(-4, n) * n;
        out.push_back(compare("eta(z)^3", eta_expansion(1, 3, last), sum, true, prec));
    }
    {
        std::vector<i64> sum(size, 0);
        for (i64 n = 1; 8 * n <= last; ++n)
            if (n % 3 != 0)
                sum[8 * n] = divisor_character_sum_mod3(n);
        const QSeries prod = eta_product_expansion({{3, 3}, {1, -1}}, last);
        out.push_back(compare("eta(3z)^3/eta(z)", prod, sum, false, prec));
    }
    return out;
}

EtaQuotient level120_quotient(int i)
{
    switch (i) {
    case 1:
        return EtaQuotient(120, {{2, 2}, {15, 3}, {1, -1}});
    case 2:
        return EtaQuotient(120, {{2, 1}, {10, 3}, {30, 2}, {5, -1}, {15, -1}});
    case 3:
        return EtaQuotient(120, {{2, 2}, {5, 1}, {60, 3}, {1, -1}, {20, -1}});
    default:
        throw std::invalid_argument("level-120 quotient index must be 1, 2 or 3");
    }
}

i64 level120_coefficient(int i, i64 n)
{
    if (n < 1)
        throw std::invalid_argument("coefficient index must be positive");
    if (i == 1) {
        const i64 t = checked_mul(8, n);
        i64 s = 0;
        for (i64 b = 0; 15 * b * b <= t; ++b) {
            const i64 rem = t - 15 * b * b;
            const i64 a = static_cast<i64>(isqrt(rem));
            if (a * a != rem)
                continue;
            for (i64 sb : {b, -b}) {
                for (i64 sa : {a, -a}) {
                    s += kronecker(4, sa) * kronecker(-4, sb) * sb;
                    if (a == 0)
                        break;
                }
                if (b == 0)
                    break;
            }
        }
        return exact_div(s, 4, "A1");
    }
    if (i == 2) {
        const i64 t = checked_mul(24, n);
        i64 s = 0;
        for (i64 a = -isqrt(t / 2); 2 * a * a <= t; ++a) {
            const int ka = kronecker(12, a);
            if (ka == 0)
                continue;
            const i64 bmax = static_cast<i64>(isqrt((t - 2 * a * a) / 10));
            for (i64 b = -bmax; b <= bmax; ++b) {
                const int kb = kronecker(12, b);
                if (kb == 0)
                    continue;
                const i64 cmax = static_cast<i64>(isqrt((t - 2 * a * a - 10 * b * b) / 15));
                for (i64 c = -cmax; c <= cmax; ++c) {
                    const int kc = kronecker(4, c);
                    if (kc == 0)
                        continue;
                    const i64 rem = t - 2 * a * a - 10 * b * b - 15 * c * c;
                    if (rem % 45 != 0)
                        continue;
                    const i64 d = static_cast<i64>(isqrt(rem / 45));
                    if (d * d != rem / 45 || d == 0)
                        continue;
                    // d and -d contribute equally since (4/.) is even.
                    s += 2 * ka * kb * kc * kronecker(4, d);
                }
            }
        }
        return exact_div(s, 16, "A2");
    }
    if (i == 3) {
        const i64 t = checked_mul(24, n);
        i64 s = 0;
        for (i64 c = 1; 160 * c < t; ++c) {
            if (c % 3 == 0)
                continue;
            const i64 sigma = divisor_character_sum_mod3(c);
            if (sigma == 0)
                continue;
            const i64 rem = t - 160 * c;
            for (i64 b = -isqrt(rem / 5); 5 * b * b <= rem; ++b) {
                const int kb = kronecker(12, b);
                if (kb == 0)
                    continue;
                const i64 r2 = rem - 5 * b * b;
                if (r2 % 3 != 0)
                    continue;
                const i64 a = static_cast<i64>(isqrt(r2 / 3));
                if (a * a != r2 / 3 || a == 0)
                    continue;
                s += 2 * kronecker(4, a) * kb * sigma;
            }
        }
        return exact_div(s, 4, "A3");
    }
    throw std::invalid_argument("level-120 coefficient index must be 1, 2 or 3");
}

BigRational level120_a3_b_weighted(i64 n)
{
    if (n < 1)
        throw std::invalid_argument("coefficient index must be positive");
    const i64 t = checked_mul(24, n);
    const i64 sigma = divisor_character_sum_mod3(n);
    i64 s = 0;
    for (i64 c = 1; 160 * c < t; ++c) {
        if (c % 3 == 0)
            continue;
        const i64 rem = t - 160 * c;
        for (i64 b = -isqrt(rem / 5); 5 * b * b <= rem; ++b) {
            const i64 r2 = rem - 5 * b * b;
            if (r2 % 3 != 0)
                continue;
            const i64 a = static_cast<i64>(isqrt(r2 / 3));
            if (a * a != r2 / 3 || a == 0)
                continue;
            s += 2 * kronecker(4, a) * kronecker(12, b) * sigma * b;
        }
    }
    return BigRational(s, 4);
}

} // namespace qflab
