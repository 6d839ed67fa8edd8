#pragma once

#include <functional>
#include <vector>

#include "qflab/quad_form.hpp"

namespace qflab {

/// Exact lattice-point enumeration inside the ellipsoid Q(v) <= bound.
///
/// Coordinates are fixed from the last to the first. For coordinate i the
/// admissible range comes from the integer-scaled Schur complement
///   S_i = d_i * H[i.., i..] - H[i.., ..i) adj(H[..i)) H[..i), i..],
///   d_i = det H[..i),
/// via the exact condition  y^T S_i y <= 2 * bound * d_i  on y = (x_i, ...).
/// No floating point is involved; the innermost coordinate is either swept
/// or solved as an integer quadratic.
class EllipsoidEnumerator {
public:
    explicit EllipsoidEnumerator(const QuadForm& form);

    /// Number of v with Q(v) == target.
    i64 count(i64 target) const;

    /// counts[n] = #{v : Q(v) == n} for 0 <= n <= bound, one sweep.
    std::vector<i64> theta(i64 bound) const;

    /// Calls visit(v, Q(v)) for every v with Q(v) <= bound.
    void for_each(i64 bound, const std::function<void(const std::vector<i64>&, i64)>& visit) const;

private:
    struct Level {
        IntMatrix schur; // size (k - i)
        i128 scale = 1;  // d_i
    };

    // Range of x_i given fixed x_{i+1..}; returns false if empty.
    bool range(std::size_t i, const i64* x, i128 bound2, i64& lo, i64& hi) const;

    QuadForm form_;
    std::vector<Level> levels_;
};

/// r(n, form): exact representation count.
i64 represent_count(const QuadForm& form, i64 n);

/// [r(0), ..., r(n_max)] from a single enumeration sweep.
std::vector<i64> theta_coeffs(const QuadForm& form, i64 n_max);

/// Source of theta coefficient vectors (lets callers plug in a disk cache).
using ThetaSource = std::function<std::vector<i64>(const QuadForm&, i64)>;

/// Answers r(n) queries for one form. Orthogonally split forms are counted by
/// convolving the theta series of two halves, grown lazily; irreducible forms
/// fall back to per-target enumeration. Not thread-safe (keeps a lazy cache).
class RepresentationCounter {
public:
    explicit RepresentationCounter(QuadForm form, ThetaSource source = {});

    i64 count(i64 n);
    const QuadForm& form() const { return form_; }
    bool split() const { return !half_a_.empty(); }

private:
    void grow(i64 n);

    QuadForm form_;
    ThetaSource source_;
    EllipsoidEnumerator enumerator_;
    std::vector<std::size_t> half_a_, half_b_;
    std::vector<i64> theta_a_, theta_b_;
    std::vector<i64> support_a_;
    i64 computed_ = -1;
};

/// Index sets of the connected components of the off-diagonal support of H.
std::vector<std::vector<std::size_t>> orthogonal_blocks(const QuadForm& form);

/// Restriction of the form to the coordinates in `indices`.
QuadForm principal_subform(const QuadForm& form, const std::vector<std::size_t>& indices);

} // namespace qflab
