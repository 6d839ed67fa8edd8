#pragma once

#include <vector>

#include "qflab/quad_form.hpp"

namespace qflab {

/// Conditions w . x == 0 (mod modulus) on the coordinates of a form's basis.
struct CongruenceSystem {
    i64 modulus = 2;
    std::vector<std::vector<i64>> relations;

    CongruenceSystem(i64 modulus, std::vector<std::vector<i64>> relations);
};

/// A sublattice together with its basis (columns, in the parent's coordinates).
struct Sublattice {
    QuadForm form;
    IntMatrix basis;
    i64 index = 1;
};

/// {x : all relations hold}, basis in column Hermite normal form.
/// The resulting form may have a norm ideal smaller than Z.
Sublattice congruence_sublattice(const QuadForm& form, const CongruenceSystem& sys);

/// Lambda_p(L) = {x : Q(x+z) == Q(z) mod p for all z}, unscaled.
Sublattice watson_sublattice(const QuadForm& form, i64 p);

/// lambda_p(L): Lambda_p(L) with Q divided by the p-part of its norm ideal,
/// returned Minkowski reduced.
QuadForm lambda_transform(const QuadForm& form, i64 p);

/// lambda_N = composition of lambda_p^{e_p} over N = prod p^{e_p}.
QuadForm lambda_composite(const QuadForm& form, i64 n);

struct JordanBlock {
    int scale = 0;                // exponent s of p^s
    std::vector<int> unit_classes; // +1 square class, -1 nonsquare class
};

/// Jordan splitting of L_p for an odd prime p, from a diagonalization of the
/// Gram matrix (B(x_i, x_j)) over the p-local integers.
struct JordanSymbolOdd {
    i64 prime = 3;
    std::vector<JordanBlock> blocks; // increasing scale

    const JordanBlock* block(int scale) const;
    std::size_t unimodular_rank() const;
    /// Unimodular component represents 0 only trivially.
    bool unimodular_part_anisotropic() const;
};

JordanSymbolOdd jordan_symbol_odd(const QuadForm& form, i64 p);

/// The two index-p sublattices with norm in pZ of a ternary lattice whose
/// unimodular p-component is a nonzero isotropic plane and p | dL/2.
struct GammaPair {
    Sublattice first;
    Sublattice second;
};

GammaPair gamma_sublattices(const QuadForm& form, i64 p);

/// All index-p sublattices (kernels of nonzero functionals mod p) whose norm
/// lies in pZ; exhaustive over the p^2 + p + 1 functionals of a ternary lattice.
std::vector<Sublattice> index_p_sublattices_with_norm_in_p(const QuadForm& form, i64 p);

} // namespace qflab
