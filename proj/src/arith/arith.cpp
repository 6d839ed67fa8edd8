#include "qflab/arith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qflab {

namespace {

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(i64 a, i64 n)
{
    a = mod_floor(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const i64 r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

i64 pow_mod(i64 b, i64 e, i64 m)
{
    i128 result = 1, base = mod_floor(b, m);
    while (e > 0) {
        if (e & 1)
            result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<i64>(result);
}

void require_good_prime(i64 dF, i64 p)
{
    if (!is_prime(p))
        throw std::invalid_argument("h-factor requires a prime");
    if (p == 2 || dF % p == 0)
        throw std::domain_error("prime divides 2*dF");
}

} // namespace

int kronecker(i64 a, i64 n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            result = -result;
    }
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0)
            return 0;
        const i64 r = mod_floor(a, 8);
        if ((twos % 2 == 1) && (r == 3 || r == 5))
            result = -result;
    }
    if (n == 1)
        return result;
    return result * jacobi(a, n);
}

int legendre(i64 a, i64 p)
{
    const i64 r = mod_floor(a, p);
    if (r == 0)
        return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

int valuation(i64 n, i64 p)
{
    if (n == 0)
        throw std::domain_error("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

i64 Factorization::product() const
{
    i64 out = 1;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i)
            out = checked_mul(out, p);
    return out;
}

bool Factorization::divisible_by(i64 p) const
{
    for (const auto& f : factors)
        if (f.first == p)
            return true;
    return false;
}

Factorization factorize(i64 n)
{
    if (n <= 0)
        throw std::invalid_argument("factorize requires n >= 1");
    Factorization f;
    f.n = n;
    for (i64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0)
            f.factors.emplace_back(d, e);
    }
    if (n > 1)
        f.factors.emplace_back(n, 1);
    return f;
}

SquareSplit square_split(i64 n, i64 modulus)
{
    if (n < 1 || modulus < 1)
        throw std::invalid_argument("square_split requires positive inputs");
    SquareSplit s;
    s.n = n;
    for (const auto& [p, e] : factorize(n).factors) {
        i64 pe = 1;
        for (int i = 0; i < e; ++i)
            pe *= p;
        if (modulus % p == 0) {
            s.n1 *= pe;
        } else {
            s.n2 *= pe;
            s.mu[p] = e;
        }
    }
    return s;
}

BigInt h_factor(i64 dF, i64 p, int mu, int rank)
{
    require_good_prime(dF, p);
    if (mu < 0)
        throw std::invalid_argument("negative exponent");
    if (rank < 3)
        throw std::invalid_argument("h-factor defined for rank >= 3");

    const BigInt P = p;
    if (rank % 2 == 0) {
        const int sign = (rank / 2) % 2 == 0 ? 1 : -1;
        const int chi = kronecker(sign * dF, p);
        const BigInt step = chi * boost::multiprecision::pow(P, (rank - 2) / 2);
        BigInt sum = 0, term = 1;
        for (int t = 0; t <= 2 * mu; ++t) {
            sum += term;
            term *= step;
        }
        return sum;
    }

    const int sign = ((rank - 1) / 2) % 2 == 0 ? 1 : -1;
    const int chi = kronecker(sign * dF, p);
    const BigInt base = boost::multiprecision::pow(P, rank - 2);
    const BigInt denom = base - 1;
    const BigInt first = (boost::multiprecision::pow(base, mu + 1) - 1) / denom;
    const BigInt second = (boost::multiprecision::pow(base, mu) - 1) / denom;
    return first - boost::multiprecision::pow(P, (rank - 3) / 2) * chi * second;
}

BigInt good_prime_ratio(i64 dF, i64 p, int mu)
{
    require_good_prime(dF, p);
    if (mu < 0)
        throw std::invalid_argument("negative exponent");
    const int chi = kronecker(dF, p);
    BigInt sum = 0;
    for (int t = 0; t <= mu; ++t) {
        const int e = mu - t;
        const int chi_pow = (e % 2 == 0) ? 1 : chi;
        sum += chi_pow * boost::multiprecision::pow(BigInt(p), t);
    }
    return sum;
}

BigRational good_prime_density_ratio(i64 dF, i64 p, int mu)
{
    require_good_prime(dF, p);
    const int chi = kronecker(dF, p);
    auto alpha = [&](int m) {
        const BigRational pm = BigRational(boost::multiprecision::pow(BigInt(p), m));
        const BigRational chi_m1 = (m % 2 == 0) ? BigRational(chi) : BigRational(1);
        const BigRational lead = BigRational(p) - chi_m1 / pm;
        const BigRational tail = BigRational(1) - BigRational(chi) / BigRational(p * p);
        return lead * tail / (BigRational(p) - BigRational(chi));
    };
    const BigRational pmu = BigRational(boost::multiprecision::pow(BigInt(p), mu));
    return pmu * alpha(mu) / alpha(0);
}

} // namespace qflab
