#include "qflab/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "qflab/enumerate.hpp"

namespace qflab {

namespace {

i128 acc_add(i128 a, i128 b)
{
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("q-series coefficient overflow");
    return r;
}

i64 common_denom(const QSeries& a, const QSeries& b)
{
    return std::lcm(a.denom(), b.denom());
}

} // namespace

QSeries::QSeries(i64 denom, i64 low, std::vector<i64> coeffs)
    : denom_(denom), low_(low), coeffs_(std::move(coeffs))
{
    if (denom_ < 1)
        throw std::invalid_argument("grading denominator must be positive");
}

QSeries QSeries::zero(i64 denom, i64 prec)
{
    return QSeries(denom, 0, std::vector<i64>(static_cast<std::size_t>(std::max<i64>(prec + 1, 0)), 0));
}

QSeries QSeries::monomial(i64 denom, i64 index, i64 coefficient, i64 prec)
{
    if (prec < index)
        return QSeries(denom, prec + 1, {});
    std::vector<i64> c(static_cast<std::size_t>(prec - index + 1), 0);
    c[0] = coefficient;
    return QSeries(denom, index, std::move(c));
}

i64 QSeries::operator[](i64 index) const
{
    if (index > prec())
        throw std::out_of_range("coefficient beyond series precision");
    if (index < low_)
        return 0;
    return coeffs_[static_cast<std::size_t>(index - low_)];
}

i64 QSeries::at_exponent(i64 n) const
{
    return (*this)[checked_mul(n, denom_)];
}

std::optional<i64> QSeries::valuation() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return low_ + static_cast<i64>(i);
    return std::nullopt;
}

bool QSeries::operator==(const QSeries& other) const
{
    return denom_ == other.denom_ && low_ == other.low_ && coeffs_ == other.coeffs_;
}

QSeries regrade(const QSeries& s, i64 denom)
{
    if (denom % s.denom() != 0)
        throw std::invalid_argument("new grading must be a multiple of the old one");
    const i64 f = denom / s.denom();
    if (f == 1)
        return s;
    QSeries d = dilate(QSeries(1, s.low(), s.coeffs()), f);
    return QSeries(denom, d.low(), d.coeffs());
}

QSeries dilate(const QSeries& s, i64 factor)
{
    if (factor < 1)
        throw std::invalid_argument("dilation factor must be positive");
    const i64 low = checked_mul(s.low(), factor);
    const i64 prec = checked_add(checked_mul(s.prec(), factor), factor - 1);
    std::vector<i64> c(static_cast<std::size_t>(std::max<i64>(prec - low + 1, 0)), 0);
    for (std::size_t i = 0; i < s.coeffs().size(); ++i)
        c[i * static_cast<std::size_t>(factor)] = s.coeffs()[i];
    return QSeries(s.denom(), low, std::move(c));
}

QSeries truncate(const QSeries& s, i64 prec)
{
    if (prec >= s.prec())
        return s;
    if (prec < s.low())
        return QSeries(s.denom(), prec + 1, {});
    std::vector<i64> c(s.coeffs().begin(), s.coeffs().begin() + (prec - s.low() + 1));
    return QSeries(s.denom(), s.low(), std::move(c));
}

QSeries shift(const QSeries& s, i64 index)
{
    return QSeries(s.denom(), checked_add(s.low(), index), s.coeffs());
}

QSeries series_add(const QSeries& a0, const QSeries& b0)
{
    const i64 d = common_denom(a0, b0);
    const QSeries a = regrade(a0, d), b = regrade(b0, d);
    const i64 low = std::min(a.low(), b.low());
    const i64 prec = std::min(a.prec(), b.prec());
    std::vector<i64> c(static_cast<std::size_t>(std::max<i64>(prec - low + 1, 0)), 0);
    for (i64 i = low; i <= prec; ++i)
        c[static_cast<std::size_t>(i - low)] = checked_add(a[i], b[i]);
    return QSeries(d, low, std::move(c));
}

QSeries series_scale(const QSeries& a, i64 k)
{
    std::vector<i64> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = checked_mul(a.coeffs()[i], k);
    return QSeries(a.denom(), a.low(), std::move(c));
}

QSeries series_sub(const QSeries& a, const QSeries& b)
{
    return series_add(a, series_scale(b, -1));
}

QSeries series_mul(const QSeries& a0, const QSeries& b0)
{
    const i64 d = common_denom(a0, b0);
    const QSeries a = regrade(a0, d), b = regrade(b0, d);
    const i64 low = checked_add(a.low(), b.low());
    const i64 prec = std::min(checked_add(a.prec(), b.low()), checked_add(b.prec(), a.low()));
    const i64 len = std::max<i64>(prec - low + 1, 0);
    std::vector<i128> acc(static_cast<std::size_t>(len), 0);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (i64 i = 0; i < len && i < static_cast<i64>(ac.size()); ++i) {
        if (ac[i] == 0)
            continue;
        const i64 jmax = std::min<i64>(len - i, static_cast<i64>(bc.size()));
        for (i64 j = 0; j < jmax; ++j)
            if (bc[j] != 0)
                acc[i + j] = acc_add(acc[i + j], static_cast<i128>(ac[i]) * bc[j]);
    }
    std::vector<i64> c(acc.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = narrow(acc[k]);
    return QSeries(d, low, std::move(c));
}

QSeries series_inverse(const QSeries& a)
{
    const auto v = a.valuation();
    if (!v)
        throw std::domain_error("cannot invert a series with no known nonzero coefficient");
    const i64 lead = a[*v];
    if (lead != 1 && lead != -1)
        throw std::domain_error("series inversion needs a leading coefficient of +-1");
    const std::vector<i64> u(a.coeffs().begin() + (*v - a.low()), a.coeffs().end());
    const std::size_t n = u.size();
    std::vector<i64> w(n, 0);
    w[0] = lead;
    for (std::size_t k = 1; k < n; ++k) {
        i128 s = 0;
        for (std::size_t i = 1; i <= k; ++i)
            if (u[i] != 0)
                s = acc_add(s, static_cast<i128>(u[i]) * w[k - i]);
        w[k] = narrow(-s * lead);
    }
    return QSeries(a.denom(), -*v, std::move(w));
}

QSeries series_pow(const QSeries& a, i64 e)
{
    if (e < 0)
        return series_pow(series_inverse(a), -e);
    QSeries result = QSeries::monomial(a.denom(), 0, 1, a.prec() - a.low());
    QSeries base = a;
    while (e > 0) {
        if (e & 1)
            result = series_mul(result, base);
        e >>= 1;
        if (e > 0)
            base = series_mul(base, base);
    }
    return result;
}

std::string series_to_json(const QSeries& s)
{
    nlohmann::json j;
    j["D"] = s.denom();
    j["prec"] = s.prec();
    if (s.low() != 0)
        j["low"] = s.low();
    j["coeffs"] = s.coeffs();
    return j.dump();
}

QSeries series_from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    const i64 low = j.value("low", i64{0});
    auto coeffs = j.at("coeffs").get<std::vector<i64>>();
    const i64 prec = j.at("prec").get<i64>();
    if (prec != low + static_cast<i64>(coeffs.size()) - 1)
        throw std::invalid_argument("series JSON: prec does not match coefficient count");
    return QSeries(j.at("D").get<i64>(), low, std::move(coeffs));
}

QSeries theta_qseries(const QuadForm& form, i64 prec)
{
    return QSeries(1, 0, theta_coeffs(form, prec));
}

} // namespace qflab
