#include "ectk/matrixtree.hpp"

#include <bit>
#include <unordered_map>

namespace ectk {

SymMatrix laplacian_submatrix(const Shape& shape, const NChoiceSet& u) {
    SymMatrix m;
    std::vector<int> comp_of;
    for (int i = 1; i <= shape.k(); ++i)
        for (int v = 1; v <= shape.size(i); ++v)
            if (!u.contains(i, v)) {
                m.labels.push_back(VarId{i, v});
                comp_of.push_back(i);
            }
    m.dim = (int)m.labels.size();
    m.entries.assign((size_t)m.dim * (size_t)m.dim, Polynomial());

    for (int r = 0; r < m.dim; ++r) {
        int i = comp_of[(size_t)r];
        int target_comp = shape.next(i);
        m.at(r, r) += e_sym(shape, target_comp, 1);
        for (int c = 0; c < m.dim; ++c)
            if (comp_of[(size_t)c] == target_comp)
                m.at(r, c) += Polynomial::from_monomial(Monomial::var(m.labels[(size_t)c]), -1);
    }
    return m;
}

Polynomial sym_det(const SymMatrix& m, int det_cap) {
    if (m.dim > det_cap)
        throw cap_exceeded("determinant dimension exceeds cap", BigInt(m.dim));
    if (m.dim == 0) return Polynomial(1);

    // det over the rows 0..dim-1 against the column subset `mask`;
    // row index = dim - popcount(mask).
    std::unordered_map<std::uint32_t, Polynomial> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> const Polynomial& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Polynomial det;
        if (mask == 0) {
            det = Polynomial(1);
        } else {
            int row = m.dim - std::popcount(mask);
            int sign = 1;
            for (int c = 0; c < m.dim; ++c) {
                std::uint32_t bit = 1u << c;
                if (!(mask & bit)) continue;
                const Polynomial& entry = m.at(row, c);
                if (!entry.is_zero()) {
                    Polynomial minor = entry * self(self, mask & ~bit);
                    det += sign > 0 ? minor : -minor;
                }
                sign = -sign;
            }
        }
        return memo.emplace(mask, std::move(det)).first->second;
    };
    std::uint32_t full = m.dim == 32 ? ~0u : (1u << m.dim) - 1;
    return rec(rec, full);
}

Polynomial forest_weight_closed(const Shape& shape, const NChoiceSet& u, int det_cap) {
    int N = u.N();
    for (int i = 1; i <= shape.k(); ++i)
        if (shape.size(shape.prev(i)) - (N + 1) < 0)
            return sym_det(laplacian_submatrix(shape, u), det_cap);

    Polynomial prefix(1), full(1), reduced(1);
    for (int i = 1; i <= shape.k(); ++i) {
        prefix = prefix * e_sym(shape, i, 1).pow((unsigned long)(shape.size(shape.prev(i)) - (N + 1)));
        full = full * e_sym(shape, i, 1);
        std::set<int> excl(u.members[(size_t)i - 1].begin(), u.members[(size_t)i - 1].end());
        reduced = reduced * e_sym(shape, i, excl, 1);
    }
    return prefix * (full - reduced);
}

}  // namespace ectk
