#include "qflab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qflab {

EllipsoidEnumerator::EllipsoidEnumerator(const QuadForm& form) : form_(form)
{
    const std::size_t k = form.rank();
    const IntMatrix& h = form.hessian();
    levels_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t m = k - i;
        IntMatrix s(m, m);
        if (i == 0) {
            s = h;
            levels_[i].scale = 1;
        } else {
            const IntMatrix lead = h.leading(i);
            const IntMatrix adj = adjugate(lead);
            const i64 d = determinant(lead);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) {
                    i128 acc = static_cast<i128>(d) * h(i + r, i + c);
                    for (std::size_t a = 0; a < i; ++a)
                        for (std::size_t b = 0; b < i; ++b)
                            acc -= static_cast<i128>(h(i + r, a)) * adj(a, b) * h(b, i + c);
                    s(r, c) = narrow(acc);
                }
            levels_[i].scale = d;
        }
        levels_[i].schur = std::move(s);
    }
}

bool EllipsoidEnumerator::range(std::size_t i, const i64* x, i128 bound2, i64& lo, i64& hi) const
{
    const std::size_t k = form_.rank();
    const IntMatrix& s = levels_[i].schur;
    const i128 a = s(0, 0);
    i128 b = 0, c = 0;
    for (std::size_t j = 1; j < k - i; ++j) {
        const i128 xj = x[i + j];
        if (xj == 0)
            continue;
        b += s(0, j) * xj;
        i128 row = 0;
        for (std::size_t l = 1; l < k - i; ++l)
            row += s(j, l) * x[i + l];
        c += row * xj;
    }
    const i128 r = bound2 * levels_[i].scale;
    // a x^2 + 2 b x + c <= r
    const i128 disc = b * b - a * (c - r);
    if (disc < 0)
        return false;
    const i128 root = isqrt(disc);
    const i128 l = ceil_div(-root - b, a);
    const i128 u = floor_div(root - b, a);
    if (l > u)
        return false;
    lo = narrow(l);
    hi = narrow(u);
    return true;
}

i64 EllipsoidEnumerator::count(i64 target) const
{
    if (target < 0)
        throw std::invalid_argument("negative target");
    if (target == 0)
        return 1;
    const std::size_t k = form_.rank();
    const IntMatrix& h = form_.hessian();
    const i128 bound2 = static_cast<i128>(2) * target;
    std::array<i64, 4> x{};
    i64 total = 0;

    auto solve_innermost = [&]() {
        i128 b = 0, c = 0;
        for (std::size_t j = 1; j < k; ++j) {
            if (x[j] == 0)
                continue;
            b += static_cast<i128>(h(0, j)) * x[j];
            i128 row = 0;
            for (std::size_t l = 1; l < k; ++l)
                row += static_cast<i128>(h(j, l)) * x[l];
            c += row * x[j];
        }
        // h00 x^2 + 2 b x + (c - 2 target) = 0
        const i128 a = h(0, 0);
        const i128 disc = b * b - a * (c - bound2);
        if (disc < 0)
            return;
        const i128 root = isqrt(disc);
        if (root * root != disc)
            return;
        int found = 0;
        if ((-b + root) % a == 0)
            ++found;
        if (root != 0 && (-b - root) % a == 0)
            ++found;
        total = checked_add(total, found);
    };

    std::function<void(std::size_t)> descend = [&](std::size_t i) {
        if (i == 0) {
            solve_innermost();
            return;
        }
        i64 lo, hi;
        if (!range(i, x.data(), bound2, lo, hi))
            return;
        for (i64 v = lo; v <= hi; ++v) {
            x[i] = v;
            descend(i - 1);
        }
        x[i] = 0;
    };
    descend(k - 1);
    return total;
}

std::vector<i64> EllipsoidEnumerator::theta(i64 bound) const
{
    if (bound < 0)
        throw std::invalid_argument("negative theta precision");
    std::vector<i64> counts(static_cast<std::size_t>(bound) + 1, 0);
    const std::size_t k = form_.rank();
    const IntMatrix& h = form_.hessian();
    const i128 bound2 = static_cast<i128>(2) * bound;
    std::array<i64, 4> x{};
    const i128 a = h(0, 0);

    std::function<void(std::size_t)> descend = [&](std::size_t i) {
        i64 lo, hi;
        if (!range(i, x.data(), bound2, lo, hi))
            return;
        if (i > 0) {
            for (i64 v = lo; v <= hi; ++v) {
                x[i] = v;
                descend(i - 1);
            }
            x[i] = 0;
            return;
        }
        i128 b = 0, c = 0;
        for (std::size_t j = 1; j < k; ++j) {
            if (x[j] == 0)
                continue;
            b += static_cast<i128>(h(0, j)) * x[j];
            i128 row = 0;
            for (std::size_t l = 1; l < k; ++l)
                row += static_cast<i128>(h(j, l)) * x[l];
            c += row * x[j];
        }
        for (i64 v = lo; v <= hi; ++v) {
            const i128 twice_q = a * v * v + 2 * b * v + c;
            auto& slot = counts[static_cast<std::size_t>(twice_q / 2)];
            if (__builtin_add_overflow(slot, 1, &slot))
                throw OverflowError("representation count overflow");
        }
    };
    descend(k - 1);
    return counts;
}

void EllipsoidEnumerator::for_each(i64 bound,
                                   const std::function<void(const std::vector<i64>&, i64)>& visit) const
{
    const std::size_t k = form_.rank();
    const i128 bound2 = static_cast<i128>(2) * bound;
    std::array<i64, 4> x{};
    std::vector<i64> v(k);

    std::function<void(std::size_t)> descend = [&](std::size_t i) {
        i64 lo, hi;
        if (!range(i, x.data(), bound2, lo, hi))
            return;
        for (i64 t = lo; t <= hi; ++t) {
            x[i] = t;
            if (i > 0) {
                descend(i - 1);
            } else {
                std::copy(x.begin(), x.begin() + static_cast<long>(k), v.begin());
                visit(v, form_.evaluate(v));
            }
        }
        x[i] = 0;
    };
    descend(k - 1);
}

i64 represent_count(const QuadForm& form, i64 n)
{
    return EllipsoidEnumerator(form).count(n);
}

std::vector<i64> theta_coeffs(const QuadForm& form, i64 n_max)
{
    return EllipsoidEnumerator(form).theta(n_max);
}

std::vector<std::vector<std::size_t>> orthogonal_blocks(const QuadForm& form)
{
    const std::size_t k = form.rank();
    std::vector<int> comp(k, -1);
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t s = 0; s < k; ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        std::vector<std::size_t> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            blocks[id].push_back(u);
            for (std::size_t v = 0; v < k; ++v)
                if (comp[v] < 0 && form.hessian(u, v) != 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
        std::sort(blocks[id].begin(), blocks[id].end());
    }
    return blocks;
}

QuadForm principal_subform(const QuadForm& form, const std::vector<std::size_t>& indices)
{
    IntMatrix h(indices.size(), indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < indices.size(); ++j)
            h(i, j) = form.hessian(indices[i], indices[j]);
    return QuadForm(std::move(h));
}

RepresentationCounter::RepresentationCounter(QuadForm form, ThetaSource source)
    : form_(std::move(form)), source_(std::move(source)), enumerator_(form_)
{
    if (!source_)
        source_ = [](const QuadForm& f, i64 n) { return theta_coeffs(f, n); };

    const auto blocks = orthogonal_blocks(form_);
    if (blocks.size() < 2)
        return;
    // Balance the two halves by rank; lattice-point counts grow like n^{rank/2}.
    const std::size_t nb = blocks.size();
    std::size_t best_mask = 0, best_cost = ~std::size_t{0};
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << nb); ++mask) {
        std::size_t ra = 0, rb = 0;
        for (std::size_t b = 0; b < nb; ++b)
            ((mask >> b) & 1 ? ra : rb) += blocks[b].size();
        const std::size_t cost = std::max(ra, rb);
        if (cost < best_cost) {
            best_cost = cost;
            best_mask = mask;
        }
    }
    for (std::size_t b = 0; b < nb; ++b) {
        auto& dst = ((best_mask >> b) & 1) ? half_a_ : half_b_;
        dst.insert(dst.end(), blocks[b].begin(), blocks[b].end());
    }
    std::sort(half_a_.begin(), half_a_.end());
    std::sort(half_b_.begin(), half_b_.end());
}

void RepresentationCounter::grow(i64 n)
{
    const i64 limit = std::max({n, 2 * computed_, i64{64}});
    theta_a_ = source_(principal_subform(form_, half_a_), limit);
    theta_b_ = source_(principal_subform(form_, half_b_), limit);
    support_a_.clear();
    for (std::size_t i = 0; i < theta_a_.size(); ++i)
        if (theta_a_[i] != 0)
            support_a_.push_back(static_cast<i64>(i));
    computed_ = limit;
}

i64 RepresentationCounter::count(i64 n)
{
    if (n < 0)
        throw std::invalid_argument("negative target");
    if (!split())
        return enumerator_.count(n);
    if (n > computed_)
        grow(n);
    i128 acc = 0;
    for (const i64 k : support_a_) {
        if (k > n)
            break;
        acc += static_cast<i128>(theta_a_[static_cast<std::size_t>(k)]) *
               theta_b_[static_cast<std::size_t>(n - k)];
    }
    return narrow(acc);
}

} // namespace qflab
