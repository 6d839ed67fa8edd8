#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "qflab/checked.hpp"

namespace qflab {

/// Dense row-major integer matrix with overflow-checked arithmetic.
/// Sized for the small (rank <= 4, a few relation rows) matrices used here.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, i64 fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<i64>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<i64>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    i64& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    i64 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator*(i64 s) const;
    bool operator==(const IntMatrix& rhs) const = default;

    /// Principal submatrix on rows/cols [0, k).
    IntMatrix leading(std::size_t k) const;
    IntMatrix column(std::size_t c) const;

    bool is_symmetric() const;
    std::vector<std::vector<i64>> to_rows() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<i64> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination in 128-bit).
i64 determinant(const IntMatrix& m);

/// Adjugate matrix, adj(M) * M = det(M) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Result of a column-style Hermite reduction: input * transform == hnf.
struct ColumnHnf {
    IntMatrix hnf;
    IntMatrix transform; // unimodular
    std::size_t rank = 0;
};

/// Column Hermite normal form: lower-echelon with positive pivots and
/// entries left of each pivot reduced into [0, pivot).
ColumnHnf column_hnf(const IntMatrix& m);

/// Basis (as columns) of the integer kernel {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
i64 ext_gcd(i64 a, i64 b, i64& s, i64& t);

} // namespace qflab
