#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qflab/checked.hpp"

namespace qflab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Kronecker symbol (a/n) for arbitrary integers a, n.
int kronecker(i64 a, i64 n);

/// Legendre symbol (a/p) for odd prime p, computed by Euler's criterion.
int legendre(i64 a, i64 p);

bool is_prime(i64 n);

/// ord_p(n) for n != 0.
int valuation(i64 n, i64 p);

struct Factorization {
    i64 n = 1;
    std::vector<std::pair<i64, int>> factors; // increasing primes, exponents >= 1

    i64 product() const;
    bool divisible_by(i64 p) const;
};

/// Trial-division factorization of n >= 1.
Factorization factorize(i64 n);

/// n = n1 * n2 with every prime of n1 dividing `modulus` and gcd(n2, modulus) = 1.
struct SquareSplit {
    i64 n = 1;
    i64 n1 = 1;
    i64 n2 = 1;
    std::map<i64, int> mu; // ord_p(n) for the primes p | n2
};

SquareSplit square_split(i64 n, i64 modulus);

/// Multiplicativity factor h_p(dF, mu) at a prime p not dividing 2*dF.
/// Even rank k:  sum_{t=0}^{2mu} chi^t p^{(k-2)t/2},  chi = ((-1)^{k/2} dF / p).
/// Odd rank k:   (p^{(k-2)(mu+1)} - 1)/(p^{k-2} - 1)
///                 - p^{(k-3)/2} chi (p^{(k-2)mu} - 1)/(p^{k-2} - 1),
///               chi = ((-1)^{(k-1)/2} dF / p).
BigInt h_factor(i64 dF, i64 p, int mu, int rank);

/// sum_{t=0}^{mu} (dF/p)^{mu-t} p^t : the normalized local density ratio
/// p^mu * alpha_p(n) / alpha_p(1) of a quaternary form at a good prime.
BigInt good_prime_ratio(i64 dF, i64 p, int mu);

/// Same ratio evaluated directly from the closed local density
/// alpha_p(n) = (p - chi^{mu+1} p^{-mu}) (1 - chi p^{-2}) / (p - chi).
BigRational good_prime_density_ratio(i64 dF, i64 p, int mu);

} // namespace qflab
