#pragma once

#include "posetcalc/diagram.hpp"

namespace posetcalc {

/// Worked examples used across the test suites and by the `examples`
/// command. All live on the unit square {0,1}^2 unless noted.

/// Zero on the left column, one field copy on the right, the right edge an
/// isomorphism. Constant in the second coordinate; codegree 1.
template <class F>
VectDiagram<F> corner_skyscraper_diagram(F field) {
    VectDiagram<F> D;
    D.L = make_grid({2, 2});
    D.field = field;
    const FiniteLattice& L = *D.L;
    D.dim.assign(4, 0);
    D.dim[L.at_coords({1, 0})] = 1;
    D.dim[L.at_coords({1, 1})] = 1;
    for (auto [a, b] : L.cover_pairs())
        D.set_edge(a, b, D.dim[a] && D.dim[b] ? Matrix<F>::identity(field, 1)
                                              : Matrix<F>(field, D.dim[b], D.dim[a]));
    return D;
}

/// One field copy everywhere except the bottom, identities into the top.
/// Codegree 2 but not codegree 1: the top corner would need dimension 2.
template <class F>
VectDiagram<F> upper_corner_diagram(F field) {
    VectDiagram<F> D;
    D.L = make_grid({2, 2});
    D.field = field;
    const FiniteLattice& L = *D.L;
    D.dim.assign(4, 1);
    D.dim[L.at_coords({0, 0})] = 0;
    for (auto [a, b] : L.cover_pairs())
        D.set_edge(a, b, D.dim[a] && D.dim[b] ? Matrix<F>::identity(field, 1)
                                              : Matrix<F>(field, D.dim[b], D.dim[a]));
    return D;
}

/// Like upper_corner_diagram with the top corner split into a direct sum of
/// the two incoming copies; codegree 1.
template <class F>
VectDiagram<F> direct_sum_diagram(F field) {
    VectDiagram<F> D;
    D.L = make_grid({2, 2});
    D.field = field;
    const FiniteLattice& L = *D.L;
    Elem lo = L.at_coords({0, 0}), left = L.at_coords({0, 1}), right = L.at_coords({1, 0}),
         top = L.at_coords({1, 1});
    D.dim.assign(4, 1);
    D.dim[lo] = 0;
    D.dim[top] = 2;
    Matrix<F> e1(field, 2, 1), e2(field, 2, 1);
    e1(0, 0) = field.one();
    e2(1, 0) = field.one();
    D.set_edge(lo, left, Matrix<F>(field, 1, 0));
    D.set_edge(lo, right, Matrix<F>(field, 1, 0));
    D.set_edge(left, top, e1);
    D.set_edge(right, top, e2);
    return D;
}

/// A zero-sphere at the origin of the unit square and zero elsewhere. Its
/// codegree-1 approximation has the homology of a circle at the top.
template <class F>
ChainDiagram<F> sphere_pushout_diagram(F field) {
    ChainDiagram<F> D;
    D.L = make_grid({2, 2});
    D.field = field;
    const FiniteLattice& L = *D.L;
    D.value.assign(4, ChainComplex<F>::zero(field));
    D.value[L.at_coords({0, 0})] = ChainComplex<F>::sphere(field, 0);
    for (auto [a, b] : L.cover_pairs()) D.set_edge(a, b, GradedMaps<F>{});
    return D;
}

/// Field copies on the three middle elements of the diamond, zero at bottom
/// and top.
template <class F>
VectDiagram<F> diamond_skyscraper_diagram(F field) {
    VectDiagram<F> D;
    D.L = make_m3();
    D.field = field;
    const FiniteLattice& L = *D.L;
    D.dim.assign(5, 1);
    D.dim[*L.find("a0")] = 0;
    D.dim[*L.find("a4")] = 0;
    for (auto [a, b] : L.cover_pairs()) D.set_edge(a, b, Matrix<F>(field, D.dim[b], D.dim[a]));
    return D;
}

/// Field copies on the pentagon's two coatoms, zero elsewhere.
template <class F>
VectDiagram<F> pentagon_skyscraper_diagram(F field) {
    VectDiagram<F> D;
    D.L = make_n5();
    D.field = field;
    const FiniteLattice& L = *D.L;
    D.dim.assign(5, 0);
    D.dim[*L.find("b2")] = 1;
    D.dim[*L.find("b3")] = 1;
    for (auto [a, b] : L.cover_pairs()) D.set_edge(a, b, Matrix<F>(field, D.dim[b], D.dim[a]));
    return D;
}

/// The cardinality functor on the power set of {1..n}; not codegree m for
/// any m < n.
inline RealDiagram cardinality_diagram(int n) {
    RealDiagram D;
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    D.L = make_power_set(names);
    D.value.resize(D.L->size());
    for (Elem x = 0; x < D.L->size(); ++x)
        D.value[x] = ExtReal(__builtin_popcount(static_cast<unsigned>(D.L->mask(x))));
    return D;
}

} // namespace posetcalc
