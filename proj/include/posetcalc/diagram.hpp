#pragma once

#include "posetcalc/chain.hpp"
#include "posetcalc/lattice.hpp"
#include "posetcalc/rational.hpp"

#include <sstream>
#include <unordered_map>

namespace posetcalc {

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {
inline std::uint64_t edge_key(Elem a, Elem b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

/// Canonical step from a toward b: the smallest upper cover of a below b.
inline Elem canonical_step(const FiniteLattice& L, Elem a, Elem b) {
    for (Elem u : L.upper_covers(a))
        if (L.leq(u, b)) return u;
    throw std::logic_error("no covering step between comparable elements");
}
} // namespace detail

/// Functor into a poset of values: only the values are data, the edge maps
/// are the order relations. V needs ==, join/meet via traits below.
template <class V>
struct OrderedDiagram {
    LatticePtr L;
    std::vector<V> value;

    const V& at(Elem x) const { return value[x]; }
};

using RealDiagram = OrderedDiagram<ExtReal>;

inline ValidationReport validate(const RealDiagram& D) {
    ValidationReport r;
    for (auto [a, b] : D.L->cover_pairs())
        if (!(D.value[a] <= D.value[b])) {
            std::ostringstream os;
            os << "value decreases along " << D.L->name(a) << " <= " << D.L->name(b);
            r.violations.push_back(os.str());
        }
    return r;
}

/// Functor into finite-dimensional spaces: a dimension per element and a
/// matrix per covering relation.
template <class F>
struct VectDiagram {
    LatticePtr L;
    F field{};
    std::vector<int> dim;
    std::unordered_map<std::uint64_t, Matrix<F>> edge;

    void set_edge(Elem a, Elem b, Matrix<F> m) { edge[detail::edge_key(a, b)] = std::move(m); }

    const Matrix<F>& edge_map(Elem a, Elem b) const {
        auto it = edge.find(detail::edge_key(a, b));
        if (it == edge.end()) throw std::logic_error("missing edge map");
        return it->second;
    }

    /// Composite along the canonical covering path from a up to b.
    Matrix<F> map(Elem a, Elem b) const {
        if (!L->leq(a, b)) throw std::invalid_argument("map requires a <= b");
        Matrix<F> m = Matrix<F>::identity(field, dim[a]);
        Elem cur = a;
        while (cur != b) {
            Elem nxt = detail::canonical_step(*L, cur, b);
            m = edge_map(cur, nxt) * m;
            cur = nxt;
        }
        return m;
    }
};

/// Functoriality: composing any first covering step with the canonical path
/// must agree with the canonical composite. This pins down all parallel
/// composites by induction on path length.
template <class F>
ValidationReport validate(const VectDiagram<F>& D) {
    ValidationReport r;
    const FiniteLattice& L = *D.L;
    for (auto [a, b] : L.cover_pairs()) {
        const auto& m = D.edge_map(a, b);
        if (m.rows() != D.dim[b] || m.cols() != D.dim[a]) {
            r.violations.push_back("edge " + L.name(a) + " -> " + L.name(b) + " has wrong shape");
            return r;
        }
    }
    for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = 0; y < L.size(); ++y) {
            if (x == y || !L.leq(x, y)) continue;
            auto canonical = D.map(x, y);
            for (Elem u : L.upper_covers(x)) {
                if (!L.leq(u, y)) continue;
                if (!(D.map(u, y) * D.edge_map(x, u) == canonical)) {
                    std::ostringstream os;
                    os << "parallel composites from " << L.name(x) << " to " << L.name(y)
                       << " differ (via " << L.name(u) << ")";
                    r.violations.push_back(os.str());
                }
            }
        }
    return r;
}

/// Functor into chain complexes; edges store graded components of the
/// connecting chain maps.
template <class F>
struct ChainDiagram {
    LatticePtr L;
    F field{};
    std::vector<ChainComplex<F>> value;
    std::unordered_map<std::uint64_t, GradedMaps<F>> edge;

    void set_edge(Elem a, Elem b, GradedMaps<F> g) { edge[detail::edge_key(a, b)] = std::move(g); }

    ChainMap<F> edge_chain_map(Elem a, Elem b) const {
        auto it = edge.find(detail::edge_key(a, b));
        if (it == edge.end()) throw std::logic_error("missing edge map");
        ChainMap<F> f;
        f.source = value[a];
        f.target = value[b];
        f.comps = it->second;
        return f;
    }

    ChainMap<F> map(Elem a, Elem b) const {
        if (!L->leq(a, b)) throw std::invalid_argument("map requires a <= b");
        ChainMap<F> m = ChainMap<F>::identity(value[a]);
        Elem cur = a;
        while (cur != b) {
            Elem nxt = detail::canonical_step(*L, cur, b);
            auto step = edge_chain_map(cur, nxt);
            ChainMap<F> comp;
            comp.source = m.source;
            comp.target = step.target;
            int lo = std::min(m.source.lo, step.target.lo);
            int hi = std::max(m.source.hi(), step.target.hi());
            for (int n = lo; n <= hi; ++n) {
                auto c = step.component(n) * m.component(n);
                if (!c.is_zero()) comp.comps[n] = std::move(c);
            }
            m = std::move(comp);
            cur = nxt;
        }
        return m;
    }
};

template <class F>
ValidationReport validate(const ChainDiagram<F>& D) {
    ValidationReport r;
    const FiniteLattice& L = *D.L;
    for (Elem x = 0; x < L.size(); ++x)
        if (!D.value[x].valid())
            r.violations.push_back("complex at " + L.name(x) + " is not a valid chain complex");
    if (!r.ok()) return r;
    for (auto [a, b] : L.cover_pairs())
        if (!D.edge_chain_map(a, b).valid())
            r.violations.push_back("edge " + L.name(a) + " -> " + L.name(b) +
                                   " is not a chain map");
    if (!r.ok()) return r;
    for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = 0; y < L.size(); ++y) {
            if (x == y || !L.leq(x, y)) continue;
            auto canonical = D.map(x, y);
            for (Elem u : L.upper_covers(x)) {
                if (!L.leq(u, y)) continue;
                auto via = D.map(u, y);
                auto step = D.edge_chain_map(x, u);
                bool same = true;
                int lo = std::min(D.value[x].lo, D.value[y].lo);
                int hi = std::max(D.value[x].hi(), D.value[y].hi());
                for (int n = lo; n <= hi && same; ++n)
                    if (!(via.component(n) * step.component(n) == canonical.component(n)))
                        same = false;
                if (!same) {
                    std::ostringstream os;
                    os << "parallel composites from " << L.name(x) << " to " << L.name(y)
                       << " differ (via " << L.name(u) << ")";
                    r.violations.push_back(os.str());
                }
            }
        }
    return r;
}

/// Value-poset operations used by the ordered-target machinery.
template <class V>
struct OrderedTraits;

template <>
struct OrderedTraits<ExtReal> {
    static ExtReal join(const ExtReal& a, const ExtReal& b) { return ext_max(a, b); }
    static ExtReal meet(const ExtReal& a, const ExtReal& b) { return ext_min(a, b); }
    static bool equal(const ExtReal& a, const ExtReal& b, const Rat& tol) {
        return ext_close(a, b, tol);
    }
};

} // namespace posetcalc
