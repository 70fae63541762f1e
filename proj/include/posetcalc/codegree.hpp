#pragma once

#include "posetcalc/colimit.hpp"
#include "posetcalc/covers.hpp"

namespace posetcalc {

struct CodegreeWitness {
    Elem apex = -1;
    std::vector<Elem> parts;
};

struct CodegreeResult {
    bool holds = true;
    std::optional<CodegreeWitness> witness;
};

namespace detail {

/// The down-closure of the parts of a cover, in canonical order.
inline std::vector<Elem> parts_lower_set(const FiniteLattice& L, const std::vector<Elem>& parts) {
    std::vector<Elem> out;
    for (Elem u : L.canonical_order()) {
        for (Elem x : parts)
            if (L.leq(u, x)) {
                out.push_back(u);
                break;
            }
    }
    return out;
}

/// Runs `check_cover` on every candidate cover of every element. Reduced
/// covers suffice: a cover containing its own target always maps to an
/// equivalence, whatever the diagram. On a non-distributive lattice only
/// covers whose cube is strongly bicartesian are relevant, so the others
/// are filtered out.
template <class CheckCover>
CodegreeResult decide_codegree(const FiniteLattice& L, int n, bool prune_non_reduced,
                               const CheckCover& check_cover) {
    if (n < 0) throw std::invalid_argument("codegree index must be >= 0");
    CodegreeResult result;
    const bool need_bicartesian_filter = !L.is_distributive();
    for (Elem v : L.canonical_order()) {
        enumerate_covers(L, v, n + 1, !prune_non_reduced, [&](const PairwiseCover& c) {
            if (need_bicartesian_filter && !is_strongly_bicartesian(L, build_cube(L, c)))
                return true;
            if (!check_cover(c)) {
                result.holds = false;
                result.witness = CodegreeWitness{v, c.parts};
                return false;
            }
            return true;
        });
        if (!result.holds) break;
    }
    return result;
}

} // namespace detail

/// Ordered target: the comparison out of the punctured cube is the join of
/// the part values, so the cube is cocartesian exactly when that join
/// reaches the apex value.
template <class V>
CodegreeResult is_codegree(const OrderedDiagram<V>& D, int n,
                           const Rat& tol = Rat(0), bool prune_non_reduced = true) {
    return detail::decide_codegree(*D.L, n, prune_non_reduced, [&](const PairwiseCover& c) {
        V j = D.value[c.parts[0]];
        for (size_t i = 1; i < c.parts.size(); ++i)
            j = OrderedTraits<V>::join(j, D.value[c.parts[i]]);
        return OrderedTraits<V>::equal(j, D.value[c.target], tol);
    });
}

/// Space-valued target: the comparison map from the colimit over the lower
/// set of the parts must be an isomorphism onto F(apex). Equivalently the
/// colimit has the right dimension and the assembled maps are surjective.
template <class F>
CodegreeResult is_codegree(const VectDiagram<F>& D, int n, bool prune_non_reduced = true) {
    const FiniteLattice& L = *D.L;
    return detail::decide_codegree(L, n, prune_non_reduced, [&](const PairwiseCover& c) {
        auto sub = detail::parts_lower_set(L, c.parts);
        int total = 0;
        for (Elem u : sub) total += D.dim[u];

        auto edges = induced_covers(L, sub);
        int rel_cols = 0;
        for (auto [i, j] : edges) rel_cols += D.dim[sub[i]];
        Matrix<F> rel(D.field, total, rel_cols);
        std::vector<int> offset(sub.size() + 1, 0);
        for (size_t i = 0; i < sub.size(); ++i) offset[i + 1] = offset[i] + D.dim[sub[i]];
        {
            int col = 0;
            for (auto [i, j] : edges) {
                auto f = D.map(sub[i], sub[j]);
                for (int v = 0; v < D.dim[sub[i]]; ++v, ++col) {
                    for (int r = 0; r < f.rows(); ++r) rel(offset[j] + r, col) = f(r, v);
                    rel(offset[i] + v, col) =
                        D.field.sub(rel(offset[i] + v, col), D.field.one());
                }
            }
        }
        int colim_dim = total - rank(rel);
        if (colim_dim != D.dim[c.target]) return false;
        return rank(assembled_maps_to(D, sub, c.target)) == D.dim[c.target];
    });
}

/// Chain target: the comparison from the bar complex over the lower set of
/// the parts into F(apex) must be a quasi-isomorphism.
template <class F>
CodegreeResult is_codegree(const ChainDiagram<F>& D, int n, bool prune_non_reduced = true) {
    const FiniteLattice& L = *D.L;
    return detail::decide_codegree(L, n, prune_non_reduced, [&](const PairwiseCover& c) {
        auto sub = detail::parts_lower_set(L, c.parts);
        auto bar = bar_hocolim(D, sub);
        return is_quasi_iso(bar.comparison_to(D, c.target));
    });
}

/// Smallest n for which the diagram is codegree n. Codegree is upward
/// closed, so the first success is the answer.
template <class D>
int codegree_lower_bound(const D& diag) {
    const FiniteLattice& L = *diag.L;
    int bound = L.is_distributive() ? L.max_jdim() : L.size();
    for (int n = 0; n <= bound; ++n)
        if (is_codegree(diag, n).holds) return n;
    return bound + 1;  // not reached on finite carriers
}

} // namespace posetcalc
