#pragma once

#include "posetcalc/diagram.hpp"

#include <random>

namespace posetcalc {

/// Deterministic RNG wrapper; every randomized suite takes an explicit seed.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }
};

template <class F>
Matrix<F> random_matrix(F field, int rows, int cols, Rng& rng) {
    Matrix<F> m(field, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = field.from_int(rng.uniform(0, 6));
    return m;
}

template <class F>
Matrix<F> random_invertible(F field, int n, Rng& rng) {
    if (n == 0) return Matrix<F>(field, 0, 0);
    for (;;) {
        auto m = random_matrix(field, n, n, rng);
        if (rank(m) == n) return m;
    }
}

/// Interval summand of a diagram: one copy of the field on a sublattice
/// interval [lo, hi], identities inside, zero maps elsewhere. For chain
/// targets the copy sits in a fixed degree, optionally as a two-cell
/// acyclic complex.
struct IntervalSummand {
    Elem lo = 0, hi = 0;
    int degree = 0;
    bool acyclic = false;

    bool alive(const FiniteLattice& L, Elem x) const { return L.leq(lo, x) && L.leq(x, hi); }
};

inline IntervalSummand random_interval(const FiniteLattice& L, Rng& rng) {
    IntervalSummand s;
    for (;;) {
        Elem a = rng.uniform(0, L.size() - 1);
        Elem b = rng.uniform(0, L.size() - 1);
        if (L.leq(a, b)) {
            s.lo = a;
            s.hi = b;
            return s;
        }
    }
}

/// Direct sum of random interval summands, then a random change of basis at
/// every element. Functorial by construction, with maps of every rank
/// profile appearing.
template <class F>
VectDiagram<F> random_vect_diagram(LatticePtr L, F field, int max_summands, Rng& rng,
                                   bool conjugate = true) {
    const int n = L->size();
    int r = rng.uniform(1, max_summands);
    std::vector<IntervalSummand> sums;
    for (int i = 0; i < r; ++i) sums.push_back(random_interval(*L, rng));

    VectDiagram<F> D;
    D.L = L;
    D.field = field;
    D.dim.assign(n, 0);
    std::vector<std::vector<int>> pos(n, std::vector<int>(r, -1));
    for (Elem x = 0; x < n; ++x)
        for (int i = 0; i < r; ++i)
            if (sums[i].alive(*L, x)) pos[x][i] = D.dim[x]++;

    std::vector<Matrix<F>> basis(n), basis_inv(n);
    for (Elem x = 0; x < n; ++x) {
        basis[x] = conjugate ? random_invertible(field, D.dim[x], rng)
                             : Matrix<F>::identity(field, D.dim[x]);
        basis_inv[x] = conjugate ? *inverse(basis[x]) : basis[x];
    }

    for (auto [a, b] : L->cover_pairs()) {
        Matrix<F> e(field, D.dim[b], D.dim[a]);
        for (int i = 0; i < r; ++i)
            if (pos[a][i] >= 0 && pos[b][i] >= 0) e(pos[b][i], pos[a][i]) = field.one();
        D.set_edge(a, b, basis[b] * e * basis_inv[a]);
    }
    return D;
}

/// Direct sum of principal-filter summands: all edge maps are injective.
template <class F>
VectDiagram<F> random_injective_vect_diagram(LatticePtr L, F field, int max_summands, Rng& rng) {
    const int n = L->size();
    int r = rng.uniform(1, max_summands);
    std::vector<Elem> births;
    for (int i = 0; i < r; ++i) births.push_back(rng.uniform(0, n - 1));

    VectDiagram<F> D;
    D.L = L;
    D.field = field;
    D.dim.assign(n, 0);
    std::vector<std::vector<int>> pos(n, std::vector<int>(r, -1));
    for (Elem x = 0; x < n; ++x)
        for (int i = 0; i < r; ++i)
            if (L->leq(births[i], x)) pos[x][i] = D.dim[x]++;
    std::vector<Matrix<F>> basis(n), basis_inv(n);
    for (Elem x = 0; x < n; ++x) {
        basis[x] = random_invertible(field, D.dim[x], rng);
        basis_inv[x] = *inverse(basis[x]);
    }
    for (auto [a, b] : L->cover_pairs()) {
        Matrix<F> e(field, D.dim[b], D.dim[a]);
        for (int i = 0; i < r; ++i)
            if (pos[a][i] >= 0 && pos[b][i] >= 0) e(pos[b][i], pos[a][i]) = field.one();
        D.set_edge(a, b, basis[b] * e * basis_inv[a]);
    }
    return D;
}

/// Interval summands carrying spheres or small acyclic complexes in random
/// degrees. No change of basis: generic per-degree conjugation would not
/// commute with the disk differentials.
template <class F>
ChainDiagram<F> random_chain_diagram(LatticePtr L, F field, int max_summands, Rng& rng) {
    const int n = L->size();
    int r = rng.uniform(1, max_summands);
    std::vector<IntervalSummand> sums;
    for (int i = 0; i < r; ++i) {
        auto s = random_interval(*L, rng);
        s.degree = rng.uniform(-1, 2);
        s.acyclic = rng.chance(0.3);
        sums.push_back(s);
    }

    ChainDiagram<F> D;
    D.L = L;
    D.field = field;
    D.value.resize(n, ChainComplex<F>(field));
    auto summand_complex = [&](const IntervalSummand& s) {
        return s.acyclic ? ChainComplex<F>::disk(field, s.degree)
                         : ChainComplex<F>::sphere(field, s.degree);
    };
    for (Elem x = 0; x < n; ++x) {
        ChainComplex<F> c(field);
        for (int i = 0; i < r; ++i)
            if (sums[i].alive(*L, x)) c = ChainComplex<F>::direct_sum(c, summand_complex(sums[i]));
        D.value[x] = std::move(c);
    }

    for (auto [a, b] : L->cover_pairs()) {
        GradedMaps<F> g;
        // offsets of each live summand inside the direct sums at a and b
        std::map<int, int> off_a, off_b;  // degree -> running dimension
        std::map<int, Matrix<F>> comps;
        auto place = [&](const ChainComplex<F>& part, std::map<int, int>& off_src,
                         std::map<int, int>& off_dst, bool identity) {
            for (int q = part.lo; q <= part.hi(); ++q) {
                int w = part.dim(q);
                if (w == 0) continue;
                int ca = off_src[q], cb = off_dst[q];
                if (identity) {
                    auto& m = comps
                                  .try_emplace(q, Matrix<F>(field, D.value[b].dim(q),
                                                            D.value[a].dim(q)))
                                  .first->second;
                    for (int t = 0; t < w; ++t) m(cb + t, ca + t) = field.one();
                }
                off_src[q] += identity ? w : 0;
                off_dst[q] += identity ? w : 0;
            }
        };
        for (int i = 0; i < r; ++i) {
            bool in_a = sums[i].alive(*L, a), in_b = sums[i].alive(*L, b);
            if (!in_a && !in_b) continue;
            auto part = summand_complex(sums[i]);
            if (in_a && in_b) {
                place(part, off_a, off_b, true);
            } else {
                // advance only the side where the summand lives
                auto& off = in_a ? off_a : off_b;
                for (int q = part.lo; q <= part.hi(); ++q) off[q] += part.dim(q);
            }
        }
        for (auto& [q, m] : comps)
            if (!m.is_zero()) g[q] = std::move(m);
        D.set_edge(a, b, std::move(g));
    }
    return D;
}

/// Monotone values grown along a linear extension of the order.
inline RealDiagram random_real_diagram(LatticePtr L, Rng& rng) {
    RealDiagram D;
    D.L = L;
    D.value.assign(L->size(), ExtReal(0));
    std::vector<Elem> order;
    for (Elem x = 0; x < L->size(); ++x) order.push_back(x);
    std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
        int ca = 0, cb = 0;
        for (Elem y = 0; y < L->size(); ++y) {
            if (L->leq(y, a)) ++ca;
            if (L->leq(y, b)) ++cb;
        }
        if (ca != cb) return ca < cb;
        return a < b;
    });
    for (Elem x : order) {
        ExtReal base(0);
        for (Elem y : L->lower_covers(x)) base = ext_max(base, D.value[y]);
        D.value[x] = ExtReal(base.value + Rat(rng.uniform(0, 4), 2));
    }
    return D;
}

} // namespace posetcalc
