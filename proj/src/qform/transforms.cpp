#include "qflab/transforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "qflab/arith.hpp"
#include "qflab/reduction.hpp"

namespace qflab {

CongruenceSystem::CongruenceSystem(i64 m, std::vector<std::vector<i64>> rel)
    : modulus(m), relations(std::move(rel))
{
    if (modulus < 2)
        throw std::invalid_argument("congruence modulus must be >= 2");
    for (auto& row : relations)
        for (auto& v : row)
            v = mod_floor(v, modulus);
}

Sublattice congruence_sublattice(const QuadForm& form, const CongruenceSystem& sys)
{
    const std::size_t k = form.rank();
    const std::size_t r = sys.relations.size();
    // Kernel of [W | m I] projects isomorphically onto the solution lattice.
    IntMatrix stacked(r, k + r);
    for (std::size_t i = 0; i < r; ++i) {
        if (sys.relations[i].size() != k)
            throw std::invalid_argument("relation length does not match form rank");
        for (std::size_t j = 0; j < k; ++j)
            stacked(i, j) = sys.relations[i][j];
        stacked(i, k + i) = sys.modulus;
    }
    IntMatrix solutions(k, k);
    if (r == 0) {
        solutions = IntMatrix::identity(k);
    } else {
        const IntMatrix ker = integer_kernel(stacked);
        if (ker.cols() != k)
            throw std::logic_error("unexpected kernel rank");
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                solutions(i, j) = ker(i, j);
    }
    IntMatrix basis = column_hnf(solutions).hnf;
    const i64 index = std::llabs(determinant(basis));
    QuadForm sub = form.sublattice(basis);
    return {std::move(sub), std::move(basis), index};
}

Sublattice watson_sublattice(const QuadForm& form, i64 p)
{
    if (!is_prime(p))
        throw std::invalid_argument("Watson transform requires a prime");
    const std::size_t k = form.rank();
    const IntMatrix& h = form.hessian();
    Sublattice first = congruence_sublattice(form, CongruenceSystem(p, h.to_rows()));
    if (p != 2)
        return first;

    // On {Hx == 0 mod 2} the map x -> Q(x) mod 2 is additive.
    std::vector<i64> parity(k);
    for (std::size_t i = 0; i < k; ++i)
        parity[i] = first.form.hessian(i, i) / 2;
    Sublattice second = congruence_sublattice(first.form, CongruenceSystem(2, {parity}));
    IntMatrix basis = first.basis * second.basis;
    return {second.form, std::move(basis), first.index * second.index};
}

QuadForm lambda_transform(const QuadForm& form, i64 p)
{
    const Sublattice lam = watson_sublattice(form, p);
    i64 g = lam.form.norm_gcd();
    i64 scale = 1;
    while (g % p == 0) {
        g /= p;
        scale *= p;
    }
    return minkowski_reduce(lam.form.scaled_down(scale)).form;
}

QuadForm lambda_composite(const QuadForm& form, i64 n)
{
    if (n < 1)
        throw std::invalid_argument("lambda_N requires N >= 1");
    QuadForm out = form;
    const auto f = factorize(n);
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
        for (int e = 0; e < it->second; ++e)
            out = lambda_transform(out, it->first);
    return out;
}

const JordanBlock* JordanSymbolOdd::block(int scale) const
{
    for (const auto& b : blocks)
        if (b.scale == scale)
            return &b;
    return nullptr;
}

std::size_t JordanSymbolOdd::unimodular_rank() const
{
    const JordanBlock* b = block(0);
    return b ? b->unit_classes.size() : 0;
}

bool JordanSymbolOdd::unimodular_part_anisotropic() const
{
    const JordanBlock* b = block(0);
    if (!b || b->unit_classes.size() <= 1)
        return true;
    if (b->unit_classes.size() > 2)
        return false;
    // <e1, e2> is anisotropic iff -e1 e2 is a nonsquare mod p.
    const int minus_one = legendre(-1, prime);
    return minus_one * b->unit_classes[0] * b->unit_classes[1] == -1;
}

namespace {

int rational_valuation(const BigRational& x, i64 p)
{
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    int v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

int unit_class(const BigRational& x, i64 p)
{
    BigInt num = abs(boost::multiprecision::numerator(x));
    BigInt den = boost::multiprecision::denominator(x);
    const int sign = x < 0 ? -1 : 1;
    while (num % p == 0)
        num /= p;
    while (den % p == 0)
        den /= p;
    const i64 n = static_cast<i64>(num % p);
    const i64 d = static_cast<i64>(den % p);
    return legendre(sign * n, p) * legendre(d, p);
}

} // namespace

JordanSymbolOdd jordan_symbol_odd(const QuadForm& form, i64 p)
{
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("jordan_symbol_odd requires an odd prime");
    std::size_t k = form.rank();
    std::vector<std::vector<BigRational>> g(k, std::vector<BigRational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            g[i][j] = BigRational(form.hessian(i, j), 2);

    std::vector<std::pair<int, int>> diag; // (valuation, unit class)
    while (k > 0) {
        int best = INT32_MAX;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j) {
                if (g[i][j] == 0)
                    continue;
                const int v = rational_valuation(g[i][j], p);
                // Prefer diagonal pivots at equal valuation.
                if (v < best || (v == best && i == j && bi != bj)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi != bj) {
            // x_i <- x_i + x_j makes the diagonal attain the minimal valuation.
            for (std::size_t c = 0; c < k; ++c)
                g[bi][c] += g[bj][c];
            for (std::size_t r = 0; r < k; ++r)
                g[r][bi] += g[r][bj];
        }
        std::swap(g[0], g[bi]);
        for (auto& row : g)
            std::swap(row[0], row[bi]);
        const BigRational pivot = g[0][0];
        for (std::size_t j = 1; j < k; ++j) {
            const BigRational f = g[j][0] / pivot;
            for (std::size_t c = 0; c < k; ++c)
                g[j][c] -= f * g[0][c];
        }
        for (std::size_t j = 1; j < k; ++j)
            g[0][j] = 0;
        diag.emplace_back(rational_valuation(pivot, p), unit_class(pivot, p));
        g.erase(g.begin());
        for (auto& row : g)
            row.erase(row.begin());
        --k;
    }

    JordanSymbolOdd js;
    js.prime = p;
    std::sort(diag.begin(), diag.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [v, u] : diag) {
        if (js.blocks.empty() || js.blocks.back().scale != v)
            js.blocks.push_back({v, {}});
        js.blocks.back().unit_classes.push_back(u);
    }
    return js;
}

std::vector<Sublattice> index_p_sublattices_with_norm_in_p(const QuadForm& form, i64 p)
{
    const std::size_t k = form.rank();
    std::vector<Sublattice> out;
    std::vector<i64> c(k, 0);
    // Projective points: first nonzero coordinate equal to 1.
    std::function<void(std::size_t, bool)> walk = [&](std::size_t i, bool lead) {
        if (i == k) {
            if (!lead)
                return;
            Sublattice s = congruence_sublattice(form, CongruenceSystem(p, {c}));
            if (s.form.norm_gcd() % p == 0)
                out.push_back(std::move(s));
            return;
        }
        if (lead) {
            for (i64 v = 0; v < p; ++v) {
                c[i] = v;
                walk(i + 1, true);
            }
        } else {
            c[i] = 0;
            walk(i + 1, false);
            c[i] = 1;
            walk(i + 1, true);
        }
        c[i] = 0;
    };
    walk(0, false);
    return out;
}

GammaPair gamma_sublattices(const QuadForm& form, i64 p)
{
    if (form.rank() != 3)
        throw std::invalid_argument("gamma sublattices are defined for ternary lattices");
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("gamma sublattices require an odd prime");
    if (form.discriminant() % p != 0)
        throw std::domain_error("prime does not divide dL/2");
    const JordanSymbolOdd js = jordan_symbol_odd(form, p);
    if (js.unimodular_rank() != 2 || js.unimodular_part_anisotropic())
        throw std::domain_error("unimodular component is not a nonzero isotropic plane");

    const IntMatrix& h = form.hessian();
    std::vector<std::vector<i64>> functionals;
    for (i64 a = 0; a < p && functionals.size() < 2; ++a)
        for (i64 b = 0; b < p && functionals.size() < 2; ++b)
            for (i64 c = 0; c < p && functionals.size() < 2; ++c) {
                const std::vector<i64> v{a, b, c};
                const i64 lead = a ? a : (b ? b : c);
                if (lead != 1)
                    continue;
                if (mod_floor(form.evaluate(v), p) != 0)
                    continue;
                std::vector<i64> phi(3, 0);
                for (std::size_t j = 0; j < 3; ++j) {
                    i128 acc = 0;
                    for (std::size_t i = 0; i < 3; ++i)
                        acc += static_cast<i128>(v[i]) * h(i, j);
                    phi[j] = static_cast<i64>(((acc % p) + p) % p);
                }
                if (phi == std::vector<i64>{0, 0, 0})
                    continue; // radical direction
                // Normalize the functional up to scalar.
                const i64 f0 = phi[0] ? phi[0] : (phi[1] ? phi[1] : phi[2]);
                i64 s, t;
                ext_gcd(f0, p, s, t);
                for (auto& x : phi)
                    x = mod_floor(static_cast<i64>(static_cast<i128>(x) * s % p), p);
                if (std::find(functionals.begin(), functionals.end(), phi) == functionals.end())
                    functionals.push_back(phi);
            }
    if (functionals.size() != 2)
        throw std::logic_error("expected exactly two isotropic directions mod p");
    return {congruence_sublattice(form, CongruenceSystem(p, {functionals[0]})),
            congruence_sublattice(form, CongruenceSystem(p, {functionals[1]}))};
}

} // namespace qflab
