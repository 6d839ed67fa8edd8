#pragma once

#include <optional>

#include "qflab/quad_form.hpp"

namespace qflab {

struct Reduction {
    QuadForm form;       // U^T H U
    IntMatrix transform; // unimodular U, columns are the reduced basis
};

/// Minkowski reduction for rank <= 4. The result satisfies
/// Q(b_k) <= Q(sum s_j b_j) for all s in {0,+-1}^k with some s_j != 0, j >= k,
/// which for rank <= 4 is the full set of Minkowski conditions.
Reduction minkowski_reduce(const QuadForm& form);

/// True when the form satisfies the reduction conditions above.
bool is_minkowski_reduced(const QuadForm& form);

/// Unimodular U with U^T H_a U = H_b, if one exists.
std::optional<IntMatrix> find_isometry(const QuadForm& a, const QuadForm& b);

bool is_isometric(const QuadForm& a, const QuadForm& b);

} // namespace qflab
