#include "qflab/int_matrix.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace qflab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, i64 fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<i64>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<i64>>& rows)
{
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
            i128 acc = 0;
            for (std::size_t k = 0; k < cols_; ++k)
                acc += static_cast<i128>((*this)(r, k)) * rhs(k, c);
            out(r, c) = narrow(acc);
        }
    return out;
}

IntMatrix IntMatrix::operator*(i64 s) const
{
    IntMatrix out = *this;
    for (auto& v : out.data_)
        v = checked_mul(v, s);
    return out;
}

IntMatrix IntMatrix::leading(std::size_t k) const
{
    IntMatrix out(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            out(r, c) = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::column(std::size_t c) const
{
    IntMatrix out(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r)
        out(r, 0) = (*this)(r, c);
    return out;
}

bool IntMatrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

std::vector<std::vector<i64>> IntMatrix::to_rows() const
{
    std::vector<std::vector<i64>> out(rows_, std::vector<i64>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r][c] = (*this)(r, c);
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? "," : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

i64 determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    std::vector<i128> a(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a[r * n + c] = m(r, c);
    auto at = [&](std::size_t r, std::size_t c) -> i128& { return a[r * n + c]; };

    int sign = 1;
    i128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && at(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(at(k, c), at(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return narrow(sign * at(n - 1, n - 1));
}

IntMatrix adjugate(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("adjugate of non-square matrix");
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t i = 0, mi = 0; i < n; ++i) {
                if (i == r)
                    continue;
                for (std::size_t j = 0, mj = 0; j < n; ++j) {
                    if (j == c)
                        continue;
                    minor(mi, mj++) = m(i, j);
                }
                ++mi;
            }
            const i64 cof = determinant(minor);
            adj(c, r) = ((r + c) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

i64 ext_gcd(i64 a, i64 b, i64& s, i64& t)
{
    i64 old_r = a, r = b;
    i64 old_s = 1, cur_s = 0;
    i64 old_t = 0, cur_t = 1;
    while (r != 0) {
        const i64 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, cur_s) = std::make_pair(cur_s, checked_sub(old_s, checked_mul(q, cur_s)));
        std::tie(old_t, cur_t) = std::make_pair(cur_t, checked_sub(old_t, checked_mul(q, cur_t)));
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

namespace {

// col_a <- s*col_a + t*col_b ; col_b <- u*col_a + v*col_b (old values)
void combine_columns(IntMatrix& m, std::size_t a, std::size_t b, i64 s, i64 t, i64 u, i64 v)
{
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const i128 x = m(r, a);
        const i128 y = m(r, b);
        m(r, a) = narrow(s * x + t * y);
        m(r, b) = narrow(u * x + v * y);
    }
}

void add_column_multiple(IntMatrix& m, std::size_t dst, std::size_t src, i64 k)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        m(r, dst) = narrow(static_cast<i128>(m(r, dst)) + static_cast<i128>(k) * m(r, src));
}

void negate_column(IntMatrix& m, std::size_t c)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        m(r, c) = -m(r, c);
}

} // namespace

ColumnHnf column_hnf(const IntMatrix& input)
{
    IntMatrix h = input;
    IntMatrix u = IntMatrix::identity(input.cols());
    std::size_t pivot_col = 0;

    for (std::size_t row = 0; row < h.rows() && pivot_col < h.cols(); ++row) {
        for (std::size_t c = pivot_col + 1; c < h.cols(); ++c) {
            const i64 a = h(row, pivot_col);
            const i64 b = h(row, c);
            if (b == 0)
                continue;
            i64 s, t;
            const i64 g = ext_gcd(a, b, s, t);
            const i64 ua = -b / g, va = a / g;
            combine_columns(h, pivot_col, c, s, t, ua, va);
            combine_columns(u, pivot_col, c, s, t, ua, va);
        }
        if (h(row, pivot_col) == 0)
            continue;
        if (h(row, pivot_col) < 0) {
            negate_column(h, pivot_col);
            negate_column(u, pivot_col);
        }
        const i64 p = h(row, pivot_col);
        for (std::size_t c = 0; c < pivot_col; ++c) {
            const i64 k = static_cast<i64>(floor_div(h(row, c), p));
            if (k != 0) {
                add_column_multiple(h, c, pivot_col, -k);
                add_column_multiple(u, c, pivot_col, -k);
            }
        }
        ++pivot_col;
    }
    return {std::move(h), std::move(u), pivot_col};
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    const ColumnHnf r = column_hnf(m);
    const std::size_t dim = m.cols() - r.rank;
    IntMatrix k(m.cols(), dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            k(i, j) = r.transform(i, r.rank + j);
    return k;
}

} // namespace qflab
