#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qflab/arith.hpp"
#include "qflab/qseries.hpp"

namespace qflab {

/// prod_{delta | N} eta(delta z)^{r_delta}.
struct EtaQuotient {
    i64 level = 1;
    std::vector<std::pair<i64, i64>> exponents; // (delta, r_delta), r != 0

    EtaQuotient() = default;
    EtaQuotient(i64 level, std::vector<std::pair<i64, i64>> exponents);

    /// k = (sum r_delta) / 2.
    BigRational weight() const;
    /// s = prod delta^{|r_delta|}.
    BigInt character_discriminant() const;
    /// sum delta r_delta; the q-valuation in units of 1/24.
    i64 order_at_infinity_24() const;
    std::string to_string() const;
};

/// Parses "2:2,15:3,1:-1".
EtaQuotient parse_eta_quotient(std::string_view text, i64 level);

/// prod_{(delta, r)} prod_{n>=1} (1 - q^{delta n})^r through q^upto (D = 1),
/// from the logarithmic-derivative recurrence; intermediate factors are never
/// expanded on their own.
QSeries euler_product(const std::vector<std::pair<i64, i64>>& factors, i64 upto);
QSeries euler_product_power(i64 scale, i64 power, i64 upto);

/// prod eta(delta z)^{r_delta} through index prec in the grading D = 24.
QSeries eta_product_expansion(const std::vector<std::pair<i64, i64>>& factors, i64 prec);

/// eta(scale z)^power through index prec in the grading D = 24.
QSeries eta_expansion(i64 scale, i64 power, i64 prec);

/// Expansion through q^prec. D = 1 when sum delta r_delta == 0 (mod 24), else D = 24.
QSeries eta_quotient_expansion(const EtaQuotient& eq, i64 prec);

struct NewmanReport {
    BigRational weight;
    BigInt character_discriminant;
    bool integral_weight = false;
    bool cond24a = false; // sum delta r_delta == 0 mod 24
    bool cond24b = false; // sum (N/delta) r_delta == 0 mod 24
    bool holds() const { return integral_weight && cond24a && cond24b; }
};

NewmanReport newman_check(const EtaQuotient& eq);

/// Value of the quadratic character ((-1)^k s / m) attached to an eta quotient
/// of integral weight.
int eta_character(const EtaQuotient& eq, i64 m);

struct CuspOrder {
    i64 d = 1; // cusp class c/d with d | N
    BigRational order;
};

/// Vanishing orders at the cusps of Gamma_0(N), one per divisor d of N.
std::vector<CuspOrder> cusp_orders(const EtaQuotient& eq);
bool is_holomorphic(const std::vector<CuspOrder>& orders);
bool is_cusp_form(const std::vector<CuspOrder>& orders);

/// [SL_2(Z) : Gamma_0(N)] = N prod_{p | N} (1 + 1/p).
i64 gamma0_index(i64 n);
/// ceil(k [SL_2(Z) : Gamma_0(N)] / 12) for even k >= 2.
i64 sturm_bound(i64 n, i64 k);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    i64 checked_through = 0;          // q-exponent
    std::optional<i64> first_mismatch; // index in the 1/24 grading
};

/// Compares the product and lacunary-sum sides of four eta identities
/// coefficientwise through q^prec (prec >= 24):
///   eta(z)           = 1/2 sum (12/n) q^{n^2/24}
///   eta(2z)^2/eta(z) = 1/2 sum (4/n) q^{n^2/8}
///   eta(z)^3         = 1/2 sum (-4/n) n q^{n^2/8}
///   eta(3z)^3/eta(z) = sum_{3 !| n} (sum_{d | n} (d/3)) q^{n/3}
std::vector<IdentityCheck> unary_theta_identities(i64 prec);

/// The three weight-2 level-120 cusp forms
///   F1 = eta(2z)^2 eta(15z)^3 / eta(z)
///   F2 = eta(2z) eta(10z)^3 eta(30z)^2 / (eta(5z) eta(15z))
///   F3 = eta(2z)^2 eta(5z) eta(60z)^3 / (eta(z) eta(20z))
EtaQuotient level120_quotient(int i);

/// n-th coefficient of F_i from its lattice-sum formula:
///   A1(n) = 1/4  sum_{a^2 + 15b^2 = 8n} (4/a)(-4/b) b
///   A2(n) = 1/16 sum_{2a^2 + 10b^2 + 15c^2 + 45d^2 = 24n} (12/ab)(4/cd)
///   A3(n) = 1/4  sum_{3a^2 + 5b^2 + 160c = 24n, c >= 1, 3 !| c} (4/a)(12/b) sum_{d | c} (d/3)
/// Throws if a division is not exact.
i64 level120_coefficient(int i, i64 n);

/// The A3 sum with an extra weight b and the divisor sum taken over d | n.
/// Odd in b, so it vanishes identically; kept to report against the product.
BigRational level120_a3_b_weighted(i64 n);

} // namespace qflab
