#pragma once

#include "posetcalc/codegree.hpp"

namespace posetcalc {

/// One layer of the approximation telescope for space-valued diagrams.
/// approx is the colimit of F over {v <= x : jdim(v) <= k} at each x, and
/// eps[x] is the canonical comparison into F(x).
template <class F>
struct VectTaylorLayer {
    int k = 0;
    VectDiagram<F> approx;
    std::vector<Matrix<F>> eps;
    // colimit presentations kept for induced-map constructions
    std::vector<std::vector<Elem>> index_set;
    std::vector<VectColimit<F>> colim;
};

template <class F>
struct ChainTaylorLayer {
    int k = 0;
    ChainDiagram<F> approx;  // values are bar complexes over growing index sets
    std::vector<ChainMap<F>> eps;
    std::vector<std::vector<Elem>> index_set;
    std::vector<BarComplex<F>> bars;
};

template <class V>
struct OrderedTaylorLayer {
    int k = 0;
    OrderedDiagram<V> approx;
};

namespace detail {

/// Unique map out of a colimit determined by legs: solves T * projection = Q
/// where Q acts on the direct sum. The projection has full row rank, so a
/// right inverse exists; the factorization is unique because Q annihilates
/// the relations.
template <class F>
Matrix<F> factor_through_colimit(const VectColimit<F>& col, const Matrix<F>& q) {
    auto sec = right_inverse(col.projection);
    if (!sec) throw std::logic_error("colimit projection is not surjective");
    return q * (*sec);
}

} // namespace detail

/// Codegree-k approximation: the left Kan extension of F restricted to the
/// elements of join-dimension at most k.
template <class F>
VectTaylorLayer<F> taylor(const VectDiagram<F>& D, int k) {
    const FiniteLattice& L = *D.L;
    VectTaylorLayer<F> T;
    T.k = k;
    T.approx.L = D.L;
    T.approx.field = D.field;
    T.approx.dim.assign(L.size(), 0);
    T.eps.resize(L.size(), Matrix<F>(D.field, 0, 0));
    T.index_set.resize(L.size());
    T.colim.resize(L.size());

    for (Elem x = 0; x < L.size(); ++x) {
        T.index_set[x] = L.below_with_jdim_at_most(x, k);
        T.colim[x] = colim_vect(D, T.index_set[x]);
        T.approx.dim[x] = T.colim[x].dim;
        T.eps[x] = detail::factor_through_colimit(
            T.colim[x], assembled_maps_to(D, T.index_set[x], x));
    }

    for (auto [a, b] : L.cover_pairs()) {
        // legs of the target colimit at the source's index elements
        const auto& sub_a = T.index_set[a];
        const auto& sub_b = T.index_set[b];
        Matrix<F> q(D.field, T.approx.dim[b], T.colim[a].offset.back());
        int c = 0;
        for (Elem v : sub_a) {
            auto it = std::find(sub_b.begin(), sub_b.end(), v);
            q.insert_block(0, c, T.colim[b].legs[it - sub_b.begin()]);
            c += D.dim[v];
        }
        T.approx.set_edge(a, b, detail::factor_through_colimit(T.colim[a], q));
    }
    return T;
}

template <class F>
ChainTaylorLayer<F> taylor(const ChainDiagram<F>& D, int k) {
    const FiniteLattice& L = *D.L;
    ChainTaylorLayer<F> T;
    T.k = k;
    T.approx.L = D.L;
    T.approx.field = D.field;
    T.approx.value.resize(L.size());
    T.index_set.resize(L.size());
    T.bars.resize(L.size());
    T.eps.resize(L.size());

    for (Elem x = 0; x < L.size(); ++x) {
        T.index_set[x] = L.below_with_jdim_at_most(x, k);
        T.bars[x] = bar_hocolim(D, T.index_set[x]);
        T.approx.value[x] = T.bars[x].cx;
        T.eps[x] = T.bars[x].comparison_to(D, x);
    }
    for (auto [a, b] : L.cover_pairs())
        T.approx.set_edge(a, b, bar_inclusion(T.bars[a], T.bars[b], D.field).comps);
    return T;
}

template <class V>
OrderedTaylorLayer<V> taylor(const OrderedDiagram<V>& D, int k) {
    const FiniteLattice& L = *D.L;
    OrderedTaylorLayer<V> T;
    T.k = k;
    T.approx.L = D.L;
    T.approx.value.resize(L.size());
    for (Elem x = 0; x < L.size(); ++x)
        T.approx.value[x] = ordered_colim(D, L.below_with_jdim_at_most(x, k));
    return T;
}

/// Pointwise infimum over the elements of join-dimension at most n below x.
/// For a simplicial complex viewed as a diagram on the opposite order this
/// is the coskeletal truncation value.
template <class V>
OrderedDiagram<V> dual_degree(const OrderedDiagram<V>& D, int n) {
    const FiniteLattice& L = *D.L;
    OrderedDiagram<V> out;
    out.L = D.L;
    out.value.resize(L.size());
    for (Elem x = 0; x < L.size(); ++x) {
        auto sub = L.below_with_jdim_at_most(x, n);
        bool first = true;
        V v{};
        for (Elem u : sub) {
            v = first ? D.value[u] : OrderedTraits<V>::meet(v, D.value[u]);
            first = false;
        }
        out.value[x] = v;
    }
    return out;
}

/// The connecting map r_k : T_k F -> T_{k+1} F, per element.
template <class F>
std::vector<Matrix<F>> taylor_step(const VectDiagram<F>& D, const VectTaylorLayer<F>& Tk,
                                   const VectTaylorLayer<F>& Tk1) {
    const FiniteLattice& L = *D.L;
    std::vector<Matrix<F>> r(L.size(), Matrix<F>(D.field, 0, 0));
    for (Elem x = 0; x < L.size(); ++x) {
        Matrix<F> q(D.field, Tk1.approx.dim[x], Tk.colim[x].offset.back());
        int c = 0;
        for (Elem v : Tk.index_set[x]) {
            auto it = std::find(Tk1.index_set[x].begin(), Tk1.index_set[x].end(), v);
            q.insert_block(0, c, Tk1.colim[x].legs[it - Tk1.index_set[x].begin()]);
            c += D.dim[v];
        }
        r[x] = detail::factor_through_colimit(Tk.colim[x], q);
    }
    return r;
}

template <class F>
std::vector<ChainMap<F>> taylor_step(const ChainDiagram<F>& D, const ChainTaylorLayer<F>& Tk,
                                     const ChainTaylorLayer<F>& Tk1) {
    const FiniteLattice& L = *D.L;
    std::vector<ChainMap<F>> r;
    for (Elem x = 0; x < L.size(); ++x)
        r.push_back(bar_inclusion(Tk.bars[x], Tk1.bars[x], D.field));
    return r;
}

/// Layers 0..upto together with the connecting maps between consecutive
/// layers.
template <class F>
struct VectTelescope {
    std::vector<VectTaylorLayer<F>> layers;
    std::vector<std::vector<Matrix<F>>> steps;  // steps[k][x] : T_k(x) -> T_{k+1}(x)
};

template <class F>
VectTelescope<F> telescope(const VectDiagram<F>& D, int upto) {
    VectTelescope<F> t;
    for (int k = 0; k <= upto; ++k) t.layers.push_back(taylor(D, k));
    for (int k = 0; k < upto; ++k)
        t.steps.push_back(taylor_step(D, t.layers[k], t.layers[k + 1]));
    return t;
}

template <class F>
struct ChainTelescope {
    std::vector<ChainTaylorLayer<F>> layers;
    std::vector<std::vector<ChainMap<F>>> steps;
};

template <class F>
ChainTelescope<F> telescope(const ChainDiagram<F>& D, int upto) {
    ChainTelescope<F> t;
    for (int k = 0; k <= upto; ++k) t.layers.push_back(taylor(D, k));
    for (int k = 0; k < upto; ++k)
        t.steps.push_back(taylor_step(D, t.layers[k], t.layers[k + 1]));
    return t;
}

template <class V>
struct OrderedTelescope {
    std::vector<OrderedTaylorLayer<V>> layers;
};

template <class V>
OrderedTelescope<V> telescope(const OrderedDiagram<V>& D, int upto) {
    OrderedTelescope<V> t;
    for (int k = 0; k <= upto; ++k) t.layers.push_back(taylor(D, k));
    return t;
}

/// Natural map T_n(zeta) between approximations induced by a natural
/// transformation zeta : G -> F (one matrix per element).
template <class F>
std::vector<Matrix<F>> taylor_of_transformation(const VectDiagram<F>& G, const VectDiagram<F>& Fd,
                                                const VectTaylorLayer<F>& TG,
                                                const VectTaylorLayer<F>& TF,
                                                const std::vector<Matrix<F>>& zeta) {
    const FiniteLattice& L = *G.L;
    std::vector<Matrix<F>> out(L.size(), Matrix<F>(G.field, 0, 0));
    for (Elem x = 0; x < L.size(); ++x) {
        Matrix<F> q(G.field, TF.approx.dim[x], TG.colim[x].offset.back());
        int c = 0;
        for (Elem v : TG.index_set[x]) {
            auto it = std::find(TF.index_set[x].begin(), TF.index_set[x].end(), v);
            q.insert_block(0, c, TF.colim[x].legs[it - TF.index_set[x].begin()] * zeta[v]);
            c += G.dim[v];
        }
        out[x] = detail::factor_through_colimit(TG.colim[x], q);
    }
    return out;
}

namespace detail {

inline int axis_count(const FiniteLattice& L) {
    switch (L.kind()) {
    case LatticeKind::Grid: return static_cast<int>(L.grid_sizes().size());
    case LatticeKind::PowerSet: return static_cast<int>(L.universe().size());
    default: throw std::domain_error("operation requires a grid or power set lattice");
    }
}

/// Coordinates of x restricted to the axes in S, zero elsewhere.
inline Elem lambda_restrict(const FiniteLattice& L, Elem x, std::uint32_t S) {
    if (L.kind() == LatticeKind::PowerSet)
        return static_cast<Elem>(L.mask(x) & S);
    auto c = L.coords(x);
    for (size_t i = 0; i < c.size(); ++i)
        if (!(S & (1u << i))) c[i] = 0;
    return L.at_coords(c);
}

inline std::uint32_t support_axes(const FiniteLattice& L, Elem v) {
    if (L.kind() == LatticeKind::PowerSet) return static_cast<std::uint32_t>(L.mask(v));
    std::uint32_t s = 0;
    auto c = L.coords(v);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) s |= 1u << i;
    return s;
}

/// Distinct values of lambda_restrict(x, S) over |S| <= k, canonical order.
inline std::vector<Elem> fast_index_set(const FiniteLattice& L, Elem x, int k) {
    int axes = axis_count(L);
    std::vector<uint8_t> seen(L.size(), 0);
    for (std::uint32_t S = 0; S < (1u << axes); ++S) {
        if (__builtin_popcount(S) > k) continue;
        seen[lambda_restrict(L, x, S)] = 1;
    }
    std::vector<Elem> out;
    for (Elem v : L.canonical_order())
        if (seen[v]) out.push_back(v);
    return out;
}

} // namespace detail

/// Same approximation as taylor() on a product of total orders, but indexed
/// only by the elements that agree with x on a set of at most k axes and
/// vanish elsewhere. That index poset maps into the full one without
/// changing the colimit.
template <class F>
VectTaylorLayer<F> taylor_grid_fast(const VectDiagram<F>& D, int k) {
    const FiniteLattice& L = *D.L;
    VectTaylorLayer<F> T;
    T.k = k;
    T.approx.L = D.L;
    T.approx.field = D.field;
    T.approx.dim.assign(L.size(), 0);
    T.eps.resize(L.size(), Matrix<F>(D.field, 0, 0));
    T.index_set.resize(L.size());
    T.colim.resize(L.size());
    for (Elem x = 0; x < L.size(); ++x) {
        T.index_set[x] = detail::fast_index_set(L, x, k);
        T.colim[x] = colim_vect(D, T.index_set[x]);
        T.approx.dim[x] = T.colim[x].dim;
        T.eps[x] = detail::factor_through_colimit(
            T.colim[x], assembled_maps_to(D, T.index_set[x], x));
    }
    for (auto [a, b] : L.cover_pairs()) {
        const auto& sub_a = T.index_set[a];
        const auto& sub_b = T.index_set[b];
        Matrix<F> q(D.field, T.approx.dim[b], T.colim[a].offset.back());
        int c = 0;
        for (Elem v : sub_a) {
            Elem w = detail::lambda_restrict(L, b, detail::support_axes(L, v));
            auto it = std::find(sub_b.begin(), sub_b.end(), w);
            q.insert_block(0, c, T.colim[b].legs[it - sub_b.begin()] * D.map(v, w));
            c += D.dim[v];
        }
        T.approx.set_edge(a, b, detail::factor_through_colimit(T.colim[a], q));
    }
    return T;
}

template <class V>
OrderedTaylorLayer<V> taylor_grid_fast(const OrderedDiagram<V>& D, int k) {
    const FiniteLattice& L = *D.L;
    OrderedTaylorLayer<V> T;
    T.k = k;
    T.approx.L = D.L;
    T.approx.value.resize(L.size());
    for (Elem x = 0; x < L.size(); ++x)
        T.approx.value[x] = ordered_colim(D, detail::fast_index_set(L, x, k));
    return T;
}

/// Value of the fast approximation at one element for chain targets, plus
/// the bar complex over the restricted index set. Edge maps are not
/// produced here: the restricted index sets are not nested along the order.
template <class F>
BarComplex<F> taylor_grid_fast_value(const ChainDiagram<F>& D, Elem x, int k) {
    return bar_hocolim(D, detail::fast_index_set(*D.L, x, k));
}

struct PropertyReport {
    bool precondition_ok = true;
    bool holds = true;
    std::string detail;
};

/// T_k F must itself be codegree k.
template <class D>
PropertyReport verify_approximation_codegree(const D& diag, int k) {
    PropertyReport rep;
    auto T = taylor(diag, k);
    auto res = is_codegree(T.approx, k);
    rep.holds = res.holds;
    if (!res.holds && res.witness) {
        rep.detail = "failing cover of " + diag.L->name(res.witness->apex) + ":";
        for (Elem p : res.witness->parts) rep.detail += " " + diag.L->name(p);
    }
    return rep;
}

/// When F is codegree n, every component of T_n F -> F is an equivalence.
/// Refuses to judge when the codegree precondition fails.
template <class F>
PropertyReport verify_approximation_identity(const VectDiagram<F>& D, int n) {
    PropertyReport rep;
    if (!is_codegree(D, n).holds) {
        rep.precondition_ok = false;
        rep.detail = "precondition unverified: diagram is not codegree " + std::to_string(n);
        return rep;
    }
    auto T = taylor(D, n);
    for (Elem x = 0; x < D.L->size(); ++x)
        if (!is_isomorphism(T.eps[x])) {
            rep.holds = false;
            rep.detail = "comparison at " + D.L->name(x) + " is not an isomorphism";
            return rep;
        }
    return rep;
}

template <class F>
PropertyReport verify_approximation_identity(const ChainDiagram<F>& D, int n) {
    PropertyReport rep;
    if (!is_codegree(D, n).holds) {
        rep.precondition_ok = false;
        rep.detail = "precondition unverified: diagram is not codegree " + std::to_string(n);
        return rep;
    }
    auto T = taylor(D, n);
    for (Elem x = 0; x < D.L->size(); ++x)
        if (!is_quasi_iso(T.eps[x])) {
            rep.holds = false;
            rep.detail = "comparison at " + D.L->name(x) + " is not a quasi-isomorphism";
            return rep;
        }
    return rep;
}

template <class V>
PropertyReport verify_approximation_identity(const OrderedDiagram<V>& D, int n,
                                             const Rat& tol = Rat(0)) {
    PropertyReport rep;
    if (!is_codegree(D, n, tol).holds) {
        rep.precondition_ok = false;
        rep.detail = "precondition unverified: diagram is not codegree " + std::to_string(n);
        return rep;
    }
    auto T = taylor(D, n);
    for (Elem x = 0; x < D.L->size(); ++x)
        if (!OrderedTraits<V>::equal(T.approx.value[x], D.value[x], tol)) {
            rep.holds = false;
            rep.detail = "approximation differs at " + D.L->name(x);
            return rep;
        }
    return rep;
}

} // namespace posetcalc
