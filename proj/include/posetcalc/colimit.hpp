#pragma once

#include "posetcalc/diagram.hpp"

#include <functional>
#include <map>

namespace posetcalc {

/// Positions (i, j) into `sub` such that sub[j] covers sub[i] in the induced
/// subposet. `sub` need not be down-closed in the ambient lattice.
inline std::vector<std::pair<int, int>> induced_covers(const FiniteLattice& L,
                                                       const std::vector<Elem>& sub) {
    std::vector<std::pair<int, int>> out;
    const int m = static_cast<int>(sub.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j || !L.lt(sub[i], sub[j])) continue;
            bool covering = true;
            for (int l = 0; l < m && covering; ++l)
                if (l != i && l != j && L.lt(sub[i], sub[l]) && L.lt(sub[l], sub[j]))
                    covering = false;
            if (covering) out.emplace_back(i, j);
        }
    return out;
}

/// Elements sorted by a linear extension of the lattice order (ties by
/// carrier index).
inline std::vector<Elem> linear_extension(const FiniteLattice& L, std::vector<Elem> sub) {
    std::vector<int> below(L.size(), 0);
    for (Elem x : sub) {
        int c = 0;
        for (Elem y : sub)
            if (L.leq(y, x)) ++c;
        below[x] = c;
    }
    std::sort(sub.begin(), sub.end(), [&](Elem a, Elem b) {
        if (below[a] != below[b]) return below[a] < below[b];
        return a < b;
    });
    return sub;
}

/// Colimit of a space-valued diagram restricted to an induced subposet,
/// presented as the quotient of the direct sum by the covering-edge
/// relations. legs[i] is the canonical map from D(sub[i]).
template <class F>
struct VectColimit {
    int dim = 0;
    std::vector<int> offset;
    Matrix<F> projection;  // from the direct sum onto the colimit
    std::vector<Matrix<F>> legs;
};

template <class F>
VectColimit<F> colim_vect(const VectDiagram<F>& D, const std::vector<Elem>& sub) {
    const F& K = D.field;
    const int m = static_cast<int>(sub.size());
    VectColimit<F> out;
    out.offset.resize(m + 1, 0);
    for (int i = 0; i < m; ++i) out.offset[i + 1] = out.offset[i] + D.dim[sub[i]];
    const int total = out.offset[m];

    auto edges = induced_covers(*D.L, sub);
    int rel_cols = 0;
    for (auto [i, j] : edges) rel_cols += D.dim[sub[i]];
    Matrix<F> rel(K, total, rel_cols);
    {
        int c = 0;
        for (auto [i, j] : edges) {
            auto f = D.map(sub[i], sub[j]);
            for (int v = 0; v < D.dim[sub[i]]; ++v, ++c) {
                for (int r = 0; r < f.rows(); ++r) rel(out.offset[j] + r, c) = f(r, v);
                rel(out.offset[i] + v, c) = K.sub(rel(out.offset[i] + v, c), K.one());
            }
        }
    }

    // Quotient by the column space: reduce the transposed relations, then
    // rewrite pivot coordinates in terms of the free ones.
    auto e = rref(rel.transposed());
    const int nrel = static_cast<int>(e.pivots.size());
    out.dim = total - nrel;
    std::vector<int> coord(total, -1);
    {
        int next_pivot = 0, free_idx = 0;
        for (int c = 0; c < total; ++c) {
            if (next_pivot < nrel && e.pivots[next_pivot] == c)
                ++next_pivot;
            else
                coord[c] = free_idx++;
        }
    }
    out.projection = Matrix<F>(K, out.dim, total);
    for (int c = 0; c < total; ++c)
        if (coord[c] >= 0) out.projection(coord[c], c) = K.one();
    for (int ri = 0; ri < nrel; ++ri) {
        int pc = e.pivots[ri];
        for (int c = 0; c < total; ++c)
            if (coord[c] >= 0 && !K.is_zero(e.mat(ri, c)))
                out.projection(coord[c], pc) = K.neg(e.mat(ri, c));
    }
    out.legs.reserve(m);
    for (int i = 0; i < m; ++i)
        out.legs.push_back(out.projection.block(0, out.offset[i], out.dim, D.dim[sub[i]]));
    return out;
}

/// The direct-sum-of-maps matrix [F(sub[0] <= v) | ... | F(sub[m-1] <= v)].
/// Its image equals the image of the comparison map out of the colimit.
template <class F>
Matrix<F> assembled_maps_to(const VectDiagram<F>& D, const std::vector<Elem>& sub, Elem v) {
    int total = 0;
    for (Elem x : sub) total += D.dim[x];
    Matrix<F> m(D.field, D.dim[v], total);
    int c = 0;
    for (Elem x : sub) {
        m.insert_block(0, c, D.map(x, v));
        c += D.dim[x];
    }
    return m;
}

/// Join of the values over a nonempty finite index set.
template <class V>
V ordered_colim(const OrderedDiagram<V>& D, const std::vector<Elem>& sub) {
    if (sub.empty()) throw std::invalid_argument("ordered colimit needs a nonempty index set");
    V v = D.value[sub[0]];
    for (size_t i = 1; i < sub.size(); ++i) v = OrderedTraits<V>::join(v, D.value[sub[i]]);
    return v;
}

/// Derived colimit of a chain-complex diagram over an induced subposet: the
/// total complex of the simplicial replacement restricted to strictly
/// increasing chains. A chain x_0 < ... < x_p contributes D(x_0) shifted up
/// by p; the faces dropping x_0 apply the diagram map into x_1 and the
/// remaining faces forget an index. Over a field this computes the derived
/// colimit, with the length-0 chains as cocone legs.
template <class F>
struct BarComplex {
    ChainComplex<F> cx;
    std::vector<std::vector<Elem>> chains;
    std::map<std::pair<int, int>, std::pair<int, int>> blocks;  // (chain,q) -> (col, width)

    /// Cocone leg from the diagram value at x (a length-0 chain).
    ChainMap<F> leg(const ChainDiagram<F>& D, Elem x) const {
        ChainMap<F> f;
        f.source = D.value[x];
        f.target = cx;
        int ci = chain_id(std::vector<Elem>{x});
        for (int q = f.source.lo; q <= f.source.hi(); ++q) {
            if (f.source.dim(q) == 0) continue;
            auto [col, width] = blocks.at({ci, q});
            Matrix<F> m(D.field, cx.dim(q), width);
            m.insert_block(col, 0, Matrix<F>::identity(D.field, width));
            f.comps[q] = std::move(m);
        }
        return f;
    }

    /// The canonical comparison into F(v): a length-0 chain at x maps by
    /// F(x <= v); longer chains map to zero.
    ChainMap<F> comparison_to(const ChainDiagram<F>& D, Elem v) const {
        ChainMap<F> f;
        f.source = cx;
        f.target = D.value[v];
        std::map<int, Matrix<F>> comps;
        for (const auto& [key, block] : blocks) {
            auto [ci, q] = key;
            if (chains[ci].size() != 1) continue;
            auto g = D.map(chains[ci][0], v).component(q);
            if (g.is_zero()) continue;
            auto& m = comps
                          .try_emplace(q, Matrix<F>(D.field, f.target.dim(q), cx.dim(q)))
                          .first->second;
            m.insert_block(0, block.first, g);
        }
        for (auto& [n, m] : comps) f.comps[n] = std::move(m);
        return f;
    }

    int chain_id(const std::vector<Elem>& c) const {
        for (size_t i = 0; i < chains.size(); ++i)
            if (chains[i] == c) return static_cast<int>(i);
        throw std::logic_error("chain not present in bar complex");
    }
};

template <class F>
BarComplex<F> bar_hocolim(const ChainDiagram<F>& D, const std::vector<Elem>& sub_in,
                          size_t generator_cap = 500000) {
    const F& K = D.field;
    BarComplex<F> bar;
    bar.cx = ChainComplex<F>(K);
    auto sub = linear_extension(*D.L, sub_in);
    const int m = static_cast<int>(sub.size());

    {
        std::vector<Elem> cur;
        std::function<void(int)> rec = [&](int start) {
            for (int i = start; i < m; ++i) {
                if (!cur.empty() && !D.L->lt(cur.back(), sub[i])) continue;
                cur.push_back(sub[i]);
                bar.chains.push_back(cur);
                if (bar.chains.size() > generator_cap)
                    throw std::runtime_error("bar complex exceeds generator budget");
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }

    int lo = 0, hi = 0;
    bool any = false;
    for (size_t ci = 0; ci < bar.chains.size(); ++ci) {
        const auto& val = D.value[bar.chains[ci][0]];
        if (val.dims.empty() || val.total_dim() == 0) continue;
        int p = static_cast<int>(bar.chains[ci].size()) - 1;
        if (!any) {
            lo = val.lo + p;
            hi = val.hi() + p;
            any = true;
        } else {
            lo = std::min(lo, val.lo + p);
            hi = std::max(hi, val.hi() + p);
        }
    }
    if (!any) return bar;

    bar.cx.lo = lo;
    bar.cx.dims.assign(hi - lo + 1, 0);
    for (size_t ci = 0; ci < bar.chains.size(); ++ci) {
        const auto& val = D.value[bar.chains[ci][0]];
        int p = static_cast<int>(bar.chains[ci].size()) - 1;
        for (int q = val.lo; q <= val.hi(); ++q) {
            int w = val.dim(q);
            if (w == 0) continue;
            int n = p + q;
            bar.blocks[{static_cast<int>(ci), q}] = {bar.cx.dims[n - lo], w};
            bar.cx.dims[n - lo] += w;
        }
    }

    std::map<std::vector<Elem>, int> chain_index;
    for (size_t i = 0; i < bar.chains.size(); ++i)
        chain_index[bar.chains[i]] = static_cast<int>(i);

    for (int n = lo; n <= hi; ++n)
        bar.cx.diffs.push_back(
            Matrix<F>(K, n == lo ? 0 : bar.cx.dims[n - 1 - lo], bar.cx.dims[n - lo]));

    auto add_block = [&](Matrix<F>& dmat, int row0, int col0, const Matrix<F>& g, bool negate) {
        for (int r = 0; r < g.rows(); ++r)
            for (int c = 0; c < g.cols(); ++c) {
                auto e = g(r, c);
                if (K.is_zero(e)) continue;
                if (negate) e = K.neg(e);
                dmat(row0 + r, col0 + c) = K.add(dmat(row0 + r, col0 + c), e);
            }
    };

    for (size_t ci = 0; ci < bar.chains.size(); ++ci) {
        const auto& c = bar.chains[ci];
        const auto& val = D.value[c[0]];
        int p = static_cast<int>(c.size()) - 1;
        for (int q = val.lo; q <= val.hi(); ++q) {
            if (val.dim(q) == 0) continue;
            int n = p + q;
            if (n == lo) continue;
            int col0 = bar.blocks.at({static_cast<int>(ci), q}).first;
            auto& dmat = bar.cx.diffs[n - lo];

            if (val.dim(q - 1) > 0)
                add_block(dmat, bar.blocks.at({static_cast<int>(ci), q - 1}).first, col0,
                          val.diff(q), p % 2 != 0);

            for (int i = 0; i <= p && p > 0; ++i) {
                std::vector<Elem> face = c;
                face.erase(face.begin() + i);
                int fi = chain_index.at(face);
                if (i == 0) {
                    if (D.value[c[1]].dim(q) == 0) continue;
                    auto g = D.map(c[0], c[1]).component(q);
                    if (!g.is_zero())
                        add_block(dmat, bar.blocks.at({fi, q}).first, col0, g, false);
                } else {
                    add_block(dmat, bar.blocks.at({fi, q}).first, col0,
                              Matrix<F>::identity(K, val.dim(q)), i % 2 != 0);
                }
            }
        }
    }
    return bar;
}

/// Chain map induced by an inclusion of index sets: each generator of the
/// small bar complex is a generator of the big one.
template <class F>
ChainMap<F> bar_inclusion(const BarComplex<F>& small, const BarComplex<F>& big, const F& field) {
    ChainMap<F> f;
    f.source = small.cx;
    f.target = big.cx;
    std::map<std::vector<Elem>, int> big_index;
    for (size_t i = 0; i < big.chains.size(); ++i) big_index[big.chains[i]] = static_cast<int>(i);
    std::map<int, Matrix<F>> comps;
    for (const auto& [key, block] : small.blocks) {
        auto [ci, q] = key;
        int p = static_cast<int>(small.chains[ci].size()) - 1;
        int n = p + q;
        auto it = big_index.find(small.chains[ci]);
        if (it == big_index.end()) throw std::logic_error("bar inclusion: chain missing");
        auto [big_col, big_width] = big.blocks.at({it->second, q});
        auto& m = comps.try_emplace(n, Matrix<F>(field, big.cx.dim(n), small.cx.dim(n)))
                      .first->second;
        for (int c = 0; c < block.second; ++c) m(big_col + c, block.first + c) = field.one();
    }
    for (auto& [n, m] : comps)
        if (!m.is_zero()) f.comps[n] = std::move(m);
    return f;
}

} // namespace posetcalc
