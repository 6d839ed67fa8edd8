#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qflab/int_matrix.hpp"

namespace qflab {

/// Positive-definite integral quadratic form Q(v) = v^T H v / 2, stored by its
/// Hessian H (symmetric, even diagonal). Rank 1..4; values are immutable.
class QuadForm {
public:
    /// Validates symmetry, even diagonal and positive definiteness.
    explicit QuadForm(IntMatrix hessian);

    /// <a_1, ..., a_k>: Q = sum a_i x_i^2.
    static QuadForm diagonal(const std::vector<i64>& coeffs);
    /// From an integral Gram matrix B(x_i, x_j) with Q(x) = B(x, x).
    static QuadForm from_gram(const IntMatrix& gram);

    std::size_t rank() const { return hessian_.rows(); }
    const IntMatrix& hessian() const { return hessian_; }
    i64 hessian(std::size_t i, std::size_t j) const { return hessian_(i, j); }

    /// det(H).
    i64 discriminant() const { return discriminant_; }

    /// gcd of {Q(e_i)} and {H_ij, i<j}; the norm ideal is norm_gcd() * Z.
    i64 norm_gcd() const;
    bool is_normalized() const { return norm_gcd() == 1; }

    i64 evaluate(const std::vector<i64>& v) const;

    /// Form of the sublattice spanned by the columns of `basis`: B^T H B.
    QuadForm sublattice(const IntMatrix& basis) const;
    /// Divides Q by `factor`; throws if the result is not integral.
    QuadForm scaled_down(i64 factor) const;

    bool operator==(const QuadForm& other) const { return hessian_ == other.hessian_; }

    /// "<1,2,3,10>" for diagonal forms, Hessian rows otherwise.
    std::string to_string() const;
    bool is_diagonal() const;

private:
    IntMatrix hessian_;
    i64 discriminant_ = 0;
};

/// Orthogonal direct sum.
QuadForm direct_sum(const QuadForm& a, const QuadForm& b);

/// Parses "1,2,3,10" (diagonal shorthand) or JSON {"rank":k,"hessian":[[..],..]}.
QuadForm parse_form(std::string_view text);

/// JSON literal {"rank":k,"hessian":[...]}.
std::string form_to_json(const QuadForm& form);

} // namespace qflab
