#include "posetcalc/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace posetcalc {

Elem CubeSpec::vertex(const FiniteLattice& L, std::uint32_t S) const {
    const int k1 = dim();
    const std::uint32_t full = (1u << k1) - 1;
    if ((S & full) == full) return apex;
    Elem m = -1;
    for (int i = 0; i < k1; ++i)
        if (!(S & (1u << i))) m = m < 0 ? parts[i] : L.meet(m, parts[i]);
    return m;
}

std::vector<Elem> CubeSpec::vertices(const FiniteLattice& L) const {
    std::vector<Elem> out(1u << dim());
    for (std::uint32_t S = 0; S < out.size(); ++S) out[S] = vertex(L, S);
    return out;
}

bool is_join_decomposition(const FiniteLattice& L, const JoinDecomposition& d) {
    Elem j = L.bottom();
    for (Elem p : d.parts) j = L.join(j, p);
    return j == d.target;
}

bool is_reduced_decomposition(const FiniteLattice& L, const JoinDecomposition& d) {
    if (!is_join_decomposition(L, d)) return false;
    if (d.parts.empty()) return d.target == L.bottom();
    for (size_t i = 0; i < d.parts.size(); ++i) {
        Elem j = L.bottom();
        for (size_t l = 0; l < d.parts.size(); ++l)
            if (l != i) j = L.join(j, d.parts[l]);
        if (j == d.target) return false;
    }
    return true;
}

bool is_indecomposable_decomposition(const FiniteLattice& L, const JoinDecomposition& d) {
    if (!is_join_decomposition(L, d)) return false;
    for (Elem p : d.parts)
        if (!L.is_join_irreducible(p)) return false;
    return true;
}

bool is_pairwise_cover(const FiniteLattice& L, const PairwiseCover& c) {
    for (Elem x : c.parts)
        if (!L.leq(x, c.target)) return false;
    for (size_t i = 0; i < c.parts.size(); ++i)
        for (size_t l = i + 1; l < c.parts.size(); ++l)
            if (L.join(c.parts[i], c.parts[l]) != c.target) return false;
    return true;
}

bool is_reduced_cover(const FiniteLattice& L, const PairwiseCover& c) {
    if (!is_pairwise_cover(L, c)) return false;
    for (Elem x : c.parts)
        if (x == c.target) return false;
    return true;
}

JoinDecomposition indecomposable_decomposition(const FiniteLattice& L, Elem v) {
    if (!L.is_distributive())
        throw std::domain_error("indecomposable decomposition requires a distributive lattice");
    JoinDecomposition d;
    d.target = v;
    if (v == L.bottom()) return d;
    for (Elem j : L.join_irreducibles()) {
        if (!L.leq(j, v)) continue;
        bool maximal = true;
        for (Elem j2 : L.join_irreducibles())
            if (j2 != j && L.leq(j, j2) && L.leq(j2, v)) { maximal = false; break; }
        if (maximal) d.parts.push_back(j);
    }
    std::sort(d.parts.begin(), d.parts.end(),
              [&](Elem a, Elem b) { return L.canonical_less(a, b); });
    return d;
}

PairwiseCover cover_from_decomposition(const FiniteLattice& L, const JoinDecomposition& d) {
    if (d.parts.empty()) throw std::invalid_argument("decomposition must have at least one part");
    PairwiseCover c;
    c.target = d.target;
    for (size_t i = 0; i < d.parts.size(); ++i) {
        Elem j = L.bottom();
        for (size_t l = 0; l < d.parts.size(); ++l)
            if (l != i) j = L.join(j, d.parts[l]);
        c.parts.push_back(j);
    }
    return c;
}

JoinDecomposition decomposition_from_cover(const FiniteLattice& L, const PairwiseCover& c) {
    if (!L.is_distributive())
        throw std::domain_error("decomposition from cover requires a distributive lattice");
    if (c.parts.size() < 2) throw std::invalid_argument("cover must have size >= 2");
    if (!is_reduced_cover(L, c)) throw std::invalid_argument("cover is not reduced");
    JoinDecomposition d;
    d.target = c.target;
    for (size_t i = 0; i < c.parts.size(); ++i) {
        Elem m = -1;
        for (size_t l = 0; l < c.parts.size(); ++l)
            if (l != i) m = m < 0 ? c.parts[l] : L.meet(m, c.parts[l]);
        d.parts.push_back(m);
    }
    return d;
}

CubeSpec build_cube(const FiniteLattice& L, const PairwiseCover& c) {
    for (Elem x : c.parts)
        if (!L.leq(x, c.target)) throw std::invalid_argument("cover part above target");
    CubeSpec cube;
    cube.apex = c.target;
    cube.parts = c.parts;
    return cube;
}

bool is_strongly_bicartesian(const FiniteLattice& L, const CubeSpec& cube) {
    const int k1 = cube.dim();
    auto verts = cube.vertices(L);
    const std::uint32_t full = (1u << k1) - 1;
    for (std::uint32_t S = 0; S < full; ++S)
        for (int i = 0; i < k1; ++i) {
            if (S & (1u << i)) continue;
            for (int j = i + 1; j < k1; ++j) {
                if (S & (1u << j)) continue;
                Elem lo = verts[S];
                Elem a = verts[S | (1u << i)];
                Elem b = verts[S | (1u << j)];
                Elem hi = verts[S | (1u << i) | (1u << j)];
                if (L.join(a, b) != hi) return false;
                if (L.meet(a, b) != lo) return false;
            }
        }
    return true;
}

PairwiseCover derived_cover(const FiniteLattice& L, const CubeSpec& cube) {
    PairwiseCover c;
    const std::uint32_t full = (1u << cube.dim()) - 1;
    c.target = cube.apex;
    for (int i = 0; i < cube.dim(); ++i) c.parts.push_back(cube.vertex(L, full & ~(1u << i)));
    return c;
}

void enumerate_covers(const FiniteLattice& L, Elem v, int size, bool allow_target,
                      const std::function<bool(const PairwiseCover&)>& visit) {
    if (size < 1) return;
    std::vector<Elem> cands;
    for (Elem x : L.canonical_order())
        if (L.leq(x, v) && (allow_target || x != v)) cands.push_back(x);

    PairwiseCover cur;
    cur.target = v;
    bool stop = false;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (stop) return;
        if (static_cast<int>(cur.parts.size()) == size) {
            if (!visit(cur)) stop = true;
            return;
        }
        int remaining = size - static_cast<int>(cur.parts.size());
        for (size_t i = start; i + remaining <= cands.size() && !stop; ++i) {
            Elem x = cands[i];
            bool ok = true;
            for (Elem y : cur.parts)
                if (L.join(x, y) != v) { ok = false; break; }
            if (!ok) continue;
            cur.parts.push_back(x);
            rec(i + 1);
            cur.parts.pop_back();
        }
    };
    rec(0);
}

std::vector<PairwiseCover> enumerate_reduced_covers(const FiniteLattice& L, Elem v, int size) {
    std::vector<PairwiseCover> out;
    enumerate_covers(L, v, size, false, [&](const PairwiseCover& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

} // namespace posetcalc
