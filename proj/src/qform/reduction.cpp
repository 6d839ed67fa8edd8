#include "qflab/reduction.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qflab/enumerate.hpp"

namespace qflab {

namespace {

i64 norm_of(const IntMatrix& h, std::size_t i)
{
    return h(i, i) / 2;
}

// Q(sum s_j b_j) for the form with Hessian h.
i64 combo_norm(const IntMatrix& h, const std::array<int, 4>& s, std::size_t k)
{
    i128 acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (s[i] == 0)
            continue;
        acc += static_cast<i128>(h(i, i) / 2);
        for (std::size_t j = i + 1; j < k; ++j)
            acc += static_cast<i128>(h(i, j)) * s[i] * s[j];
    }
    return narrow(acc);
}

// Finds a violated condition: returns (index to replace, coefficient vector).
bool find_violation(const IntMatrix& h, std::size_t& replace, std::array<int, 4>& coeffs)
{
    const std::size_t k = h.rows();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= 3;
    for (std::size_t pos = 0; pos < k; ++pos) {
        for (std::size_t code = 0; code < total; ++code) {
            std::array<int, 4> s{};
            std::size_t c = code;
            std::size_t last = k;
            for (std::size_t i = 0; i < k; ++i) {
                s[i] = static_cast<int>(c % 3) - 1;
                c /= 3;
                if (s[i] != 0 && i >= pos)
                    last = i;
            }
            if (last == k)
                continue;
            if (combo_norm(h, s, k) < norm_of(h, pos)) {
                replace = last;
                coeffs = s;
                return true;
            }
        }
    }
    return false;
}

void sort_basis(IntMatrix& h, IntMatrix& u)
{
    const std::size_t k = h.rows();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return h(a, a) < h(b, b); });
    IntMatrix nh(k, k), nu(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            nh(i, j) = h(order[i], order[j]);
        for (std::size_t r = 0; r < k; ++r)
            nu(r, i) = u(r, order[i]);
    }
    h = std::move(nh);
    u = std::move(nu);
}

} // namespace

Reduction minkowski_reduce(const QuadForm& form)
{
    const std::size_t k = form.rank();
    IntMatrix u = IntMatrix::identity(k);
    IntMatrix h = form.hessian();
    for (;;) {
        sort_basis(h, u);
        std::size_t replace = 0;
        std::array<int, 4> s{};
        if (!find_violation(h, replace, s))
            break;
        // b_replace <- sum s_j b_j, unimodular because s_replace = +-1.
        IntMatrix step = IntMatrix::identity(k);
        for (std::size_t j = 0; j < k; ++j)
            step(j, replace) = s[j];
        u = u * step;
        h = step.transpose() * h * step;
    }
    // Sign convention: first nonzero entry of each basis vector positive.
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t r = 0;
        while (r < k && u(r, c) == 0)
            ++r;
        if (u(r, c) < 0) {
            for (std::size_t i = 0; i < k; ++i)
                u(i, c) = -u(i, c);
        }
    }
    h = u.transpose() * form.hessian() * u;
    return {QuadForm(std::move(h)), std::move(u)};
}

bool is_minkowski_reduced(const QuadForm& form)
{
    const IntMatrix& h = form.hessian();
    for (std::size_t i = 0; i + 1 < form.rank(); ++i)
        if (h(i, i) > h(i + 1, i + 1))
            return false;
    std::size_t replace = 0;
    std::array<int, 4> s{};
    return !find_violation(h, replace, s);
}

std::optional<IntMatrix> find_isometry(const QuadForm& a, const QuadForm& b)
{
    if (a.rank() != b.rank() || a.discriminant() != b.discriminant())
        return std::nullopt;
    const std::size_t k = a.rank();
    const Reduction ra = minkowski_reduce(a);
    const Reduction rb = minkowski_reduce(b);
    const IntMatrix& ha = ra.form.hessian();
    const IntMatrix& hb = rb.form.hessian();

    i64 max_norm = 0;
    for (std::size_t i = 0; i < k; ++i)
        max_norm = std::max(max_norm, norm_of(ha, i));

    const auto theta_a = theta_coeffs(ra.form, max_norm);
    const auto theta_b = theta_coeffs(rb.form, max_norm);
    if (theta_a != theta_b)
        return std::nullopt;

    std::map<i64, std::vector<std::vector<i64>>> by_norm;
    EllipsoidEnumerator(rb.form).for_each(max_norm, [&](const std::vector<i64>& v, i64 q) {
        if (q > 0)
            by_norm[q].push_back(v);
    });

    auto pair = [&](const std::vector<i64>& x, const std::vector<i64>& y) {
        i128 acc = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                acc += static_cast<i128>(x[i]) * hb(i, j) * y[j];
        return narrow(acc);
    };

    std::vector<const std::vector<i64>*> chosen(k, nullptr);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == k)
            return true;
        const auto it = by_norm.find(norm_of(ha, i));
        if (it == by_norm.end())
            return false;
        for (const auto& v : it->second) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = pair(*chosen[j], v) == ha(j, i);
            if (!ok)
                continue;
            chosen[i] = &v;
            if (assign(i + 1))
                return true;
        }
        return false;
    };
    if (!assign(0))
        return std::nullopt;

    // Columns of w map the reduced basis of a into the reduced coordinates of b.
    IntMatrix w(k, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < k; ++r)
            w(r, c) = (*chosen[c])[r];
    // a-basis = Ua^{-1} coordinates; overall map x_a -> Ub W Ua^{-1} x_a.
    // Ua is unimodular so its inverse is +-adjugate.
    const i64 det_ua = determinant(ra.transform);
    const IntMatrix ua_inv = adjugate(ra.transform) * det_ua;
    const IntMatrix map = rb.transform * w * ua_inv; // maps a-coordinates into b-coordinates
    // map^T H_b map == H_a; report the direction requested: U^T H_a U == H_b.
    const i64 det_map = determinant(map);
    IntMatrix inv = adjugate(map) * det_map;
    if (!(inv.transpose() * a.hessian() * inv == b.hessian()))
        throw std::logic_error("isometry reconstruction failed");
    return inv;
}

bool is_isometric(const QuadForm& a, const QuadForm& b)
{
    return find_isometry(a, b).has_value();
}

} // namespace qflab
