#pragma once

#include <vector>

#include "ectk/domain.hpp"
#include "ectk/poly.hpp"

namespace ectk {

inline constexpr int kDefaultDetCap = 12;

// Symbolic square matrix over the polynomial ring, rows and columns labeled
// by the vertices of X \ U in component-concatenated order.
struct SymMatrix {
    int dim = 0;
    std::vector<VarId> labels;
    std::vector<Polynomial> entries;  // row-major, dim * dim

    const Polynomial& at(int r, int c) const { return entries[(size_t)(r * dim + c)]; }
    Polynomial& at(int r, int c) { return entries[(size_t)(r * dim + c)]; }
};

// Principal submatrix of the directed Laplacian of the full cyclic digraph,
// with the rows and columns of U deleted: for u in X_i the diagonal carries
// e_1(X_{i+1}) and the entry toward v in X_{i+1} \ U_{i+1} carries -x_v. For
// k = 1 the two cases land on the same cell and the diagonal becomes
// e_1(X_1) - x_u, matching the self-loop edge of the complete digraph.
SymMatrix laplacian_submatrix(const Shape& shape, const NChoiceSet& u);

// Exact determinant by cofactor expansion, memoized over column subsets.
// The 0x0 determinant is 1. Throws cap_exceeded above det_cap.
Polynomial sym_det(const SymMatrix& m, int det_cap = kDefaultDetCap);

// Closed-form total weight of the spanning in-forests rooted at U:
// prod_i e_1(X_i)^{n_{i-1}-(N+1)} (prod_j e_1(X_j) - prod_j e_1(X_j\U_j)).
// When an exponent would be negative (some n_{i-1} = N) the value is
// computed through the determinant instead; no negative power is formed.
Polynomial forest_weight_closed(const Shape& shape, const NChoiceSet& u,
                                int det_cap = kDefaultDetCap);

}  // namespace ectk
