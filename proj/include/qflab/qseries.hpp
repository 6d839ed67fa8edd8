#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qflab/checked.hpp"
#include "qflab/quad_form.hpp"

namespace qflab {

/// Truncated power series in q^{1/D} with exact integer coefficients.
/// coeffs[i] is the coefficient of q^{(low + i)/D}; every coefficient with
/// index <= prec is known (those below `low` are zero).
class QSeries {
public:
    QSeries() = default;
    QSeries(i64 denom, i64 low, std::vector<i64> coeffs);
    /// All coefficients known and zero through index `prec`.
    static QSeries zero(i64 denom, i64 prec);
    /// q^{index/D} + O(q^{(prec+1)/D}).
    static QSeries monomial(i64 denom, i64 index, i64 coefficient, i64 prec);

    i64 denom() const { return denom_; }
    i64 low() const { return low_; }
    i64 prec() const { return low_ + static_cast<i64>(coeffs_.size()) - 1; }
    const std::vector<i64>& coeffs() const { return coeffs_; }

    /// Coefficient at exponent index/D; throws past the precision.
    i64 operator[](i64 index) const;
    /// Coefficient of q^n for an integral exponent n.
    i64 at_exponent(i64 n) const;

    /// Index of the first nonzero coefficient, if any is known.
    std::optional<i64> valuation() const;

    bool operator==(const QSeries& other) const;

private:
    i64 denom_ = 1;
    i64 low_ = 0;
    std::vector<i64> coeffs_{0};
};

/// Same series over the finer grading D' (a multiple of D).
QSeries regrade(const QSeries& s, i64 denom);
QSeries truncate(const QSeries& s, i64 prec);
/// Multiplies every exponent by `factor` (q -> q^factor).
QSeries dilate(const QSeries& s, i64 factor);
/// q^{index/D} * s.
QSeries shift(const QSeries& s, i64 index);

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_scale(const QSeries& a, i64 c);
/// Truncated Cauchy product; gradings are brought to their lcm.
QSeries series_mul(const QSeries& a, const QSeries& b);
/// 1/a; the leading coefficient must be +-1.
QSeries series_inverse(const QSeries& a);
QSeries series_pow(const QSeries& a, i64 e);

/// {"D":..,"prec":..,"coeffs":[..]} plus "low" when the series does not start at q^0.
std::string series_to_json(const QSeries& s);
QSeries series_from_json(const std::string& text);

/// Theta series of a form as a D=1 series through q^prec.
QSeries theta_qseries(const QuadForm& form, i64 prec);

} // namespace qflab
