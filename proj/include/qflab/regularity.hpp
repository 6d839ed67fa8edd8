#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qflab/arith.hpp"
#include "qflab/enumerate.hpp"
#include "qflab/lattice_data.hpp"

namespace qflab {

/// Least n <= cap with r(n^2) > 0; throws std::runtime_error if there is none.
i64 m_s(const QuadForm& form, i64 cap);
i64 m_s(RepresentationCounter& counter, i64 cap);

struct Counterexample {
    i64 n = 0;
    i64 n1 = 0;          // part of n built from primes dividing 2dL
    BigInt expected;     // r(n1^2) * prod h_p
    i64 actual = 0;      // r(n^2)
};

/// Outcome of checking r(n1^2 n2^2) = r(n1^2) prod_{p | n2} h_p(dL, mu_p)
/// for every n <= bound. A pass only means "verified up to bound".
struct RegularityReport {
    QuadForm form;
    i64 bound = 0;
    std::optional<i64> ms; // absent when no square <= bound^2 is represented
    bool pass = false;
    std::optional<Counterexample> counterexample;

    std::string to_json() const;
};

RegularityReport is_strongly_s_regular(const QuadForm& form, i64 bound, ThetaSource source = {});
RegularityReport is_strongly_s_regular(RepresentationCounter& counter, i64 bound);

/// Compares r(n^2) between the two classes of a pair.
struct IndistinguishabilityReport {
    std::string pair;
    i64 bound = 0;
    bool restricted = false; // only n whose primes all divide dL
    i64 checked = 0;
    bool pass = false;
    std::optional<i64> n;
    i64 primary_count = 0;
    i64 mate_count = 0;
};

IndistinguishabilityReport check_indistinguishable(const GenusPair& pair, i64 bound, bool restricted);

/// Square recursion at a good odd prime p for a form whose genus is
/// indistinguishable by squares:
///   p | n:  r(p^2 n^2) = (p^2 + 1) r(n^2) - p^2 r(n^2 / p^2)
///   p !| n: r(p^2 n^2) = (p^2 + chi p + 1) r(n^2),  chi = (dL / p)
/// literal_mismatches counts the n where the first line, read with
/// r(n^2/p^2) = 0, fails (it never applies to p !| n).
struct HeckeReport {
    QuadForm form;
    i64 p = 0;
    i64 bound = 0;
    bool pass = false;
    std::optional<i64> first_failure;
    i64 lhs = 0;
    i64 rhs = 0;
    i64 literal_mismatches = 0;
};

HeckeReport hecke_square_recursion_check(const QuadForm& form, i64 p, i64 bound);

/// One named identity between representation numbers, checked on a range.
struct IdentityResult {
    std::string name;
    i64 checked_through = 0;
    bool pass = false;
    std::optional<i64> n;
    i64 lhs = 0;
    i64 rhs = 0;
};

struct IdentityReport {
    std::string family;
    std::vector<IdentityResult> identities;
    bool pass() const;
};

/// Identities comparing the two classes of a bundled genus pair ("L1", "L2", "L3").
///   L1: r(4n) and r(4n+1) agree (directly and through the sublattices), n <= n_max.
///   L2: r(3n+1) = 2 r(3n+1, K); the 9n^2 reductions through T, n <= n_max;
///       r(n^2) agree for n <= 2 n_max.
///   L3: the 25n^2 reductions through M, N, K1, K2, n <= n_max;
///       r(n) agree for n == 1, 4 (mod 5), n <= linear_max.
IdentityReport genus_identity_check(const std::string& family, i64 n_max, i64 linear_max);

} // namespace qflab
