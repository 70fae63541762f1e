#pragma once

#include "posetcalc/lattice.hpp"

#include <cstdint>
#include <functional>

namespace posetcalc {

/// Family of elements whose join is the target.
struct JoinDecomposition {
    Elem target = -1;
    std::vector<Elem> parts;
};

/// Family of elements below the target whose pairwise joins all equal it.
/// A size-1 cover is any single element <= target.
struct PairwiseCover {
    Elem target = -1;
    std::vector<Elem> parts;
};

/// A (k+1)-cube in the lattice, presented by its apex and a pairwise cover
/// of size k+1. The vertex at a subset S of {0..k} is the apex when S is
/// full and the meet of the parts indexed outside S otherwise.
struct CubeSpec {
    Elem apex = -1;
    std::vector<Elem> parts;

    int dim() const { return static_cast<int>(parts.size()); }
    Elem vertex(const FiniteLattice& L, std::uint32_t S) const;
    /// All 2^(k+1) vertices indexed by subset bitmask.
    std::vector<Elem> vertices(const FiniteLattice& L) const;
};

bool is_join_decomposition(const FiniteLattice& L, const JoinDecomposition& d);
bool is_reduced_decomposition(const FiniteLattice& L, const JoinDecomposition& d);
bool is_indecomposable_decomposition(const FiniteLattice& L, const JoinDecomposition& d);

bool is_pairwise_cover(const FiniteLattice& L, const PairwiseCover& c);
bool is_reduced_cover(const FiniteLattice& L, const PairwiseCover& c);

/// The unique reduced indecomposable join-decomposition: the maximal
/// join-irreducibles below v. Empty for the least element.
/// Requires a distributive lattice.
JoinDecomposition indecomposable_decomposition(const FiniteLattice& L, Elem v);

/// x^i = join of the other parts. A singleton decomposition yields the
/// empty join, i.e. the cover {bottom}.
PairwiseCover cover_from_decomposition(const FiniteLattice& L, const JoinDecomposition& d);

/// q^i = meet of the other parts. Requires a reduced cover of size >= 2 in
/// a distributive lattice; the result is a reduced decomposition of the
/// same target.
JoinDecomposition decomposition_from_cover(const FiniteLattice& L, const PairwiseCover& c);

CubeSpec build_cube(const FiniteLattice& L, const PairwiseCover& c);

/// Every 2-face must be simultaneously a join square and a meet square.
bool is_strongly_bicartesian(const FiniteLattice& L, const CubeSpec& cube);

/// Derived cover of a cube: part i is the vertex at the full set minus {i}.
PairwiseCover derived_cover(const FiniteLattice& L, const CubeSpec& cube);

/// Enumerates covers of v of the given size with distinct parts, sorted by
/// the canonical element order, in lexicographic order over part lists.
/// When allow_target is false only reduced covers (no part equal to v) are
/// produced. The visitor returns false to stop early.
void enumerate_covers(const FiniteLattice& L, Elem v, int size, bool allow_target,
                      const std::function<bool(const PairwiseCover&)>& visit);

std::vector<PairwiseCover> enumerate_reduced_covers(const FiniteLattice& L, Elem v, int size);

} // namespace posetcalc
