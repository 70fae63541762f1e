#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace posetcalc {

/// Index of an element in a lattice carrier.
using Elem = int;

enum class LatticeKind { Grid, PowerSet, Explicit };

/// A finite lattice: carrier, order, join and meet.
///
/// Three flavors share one interface:
///   - Grid: a product of total orders {0..s_i-1}, ordered coordinatewise.
///   - PowerSet: subsets of a finite universe, ordered by inclusion.
///   - Explicit: carrier given by name, order generated by covering pairs.
///
/// Explicit lattices are validated eagerly at construction: the order must be
/// a partial order with all pairwise joins and meets and a unique least
/// element. All derived data (covers, distributivity, join-dimensions) is
/// computed up front, so a constructed lattice is immutable and safe to share
/// across threads.
class FiniteLattice {
public:
    static FiniteLattice grid(std::vector<int> sizes);
    static FiniteLattice power_set(std::vector<std::string> universe);
    static FiniteLattice explicit_lattice(std::vector<std::string> names,
                                          const std::vector<std::pair<std::string, std::string>>& covers);

    LatticeKind kind() const { return kind_; }
    int size() const { return size_; }
    Elem bottom() const { return bottom_; }

    bool leq(Elem a, Elem b) const;
    bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
    Elem join(Elem a, Elem b) const;
    Elem meet(Elem a, Elem b) const;

    /// Covering pairs (u, v) with u covered by v, in carrier order.
    const std::vector<std::pair<Elem, Elem>>& cover_pairs() const { return cover_pairs_; }
    const std::vector<Elem>& upper_covers(Elem a) const { return up_[a]; }
    const std::vector<Elem>& lower_covers(Elem a) const { return down_[a]; }

    bool is_distributive() const { return distributive_; }
    /// Violating triple (x, y, z) with x/\(y\/z) != (x/\y)\/(x/\z), if any.
    std::optional<std::array<Elem, 3>> distributivity_witness() const { return dist_witness_; }

    /// True when v is not least and cannot be written as a join of two
    /// strictly smaller elements.
    bool is_join_irreducible(Elem v) const { return join_irr_[v]; }
    const std::vector<Elem>& join_irreducibles() const { return join_irreducibles_; }

    /// Size of the unique reduced indecomposable join-decomposition;
    /// 0 for the least element. Requires a distributive lattice.
    int jdim(Elem v) const;
    int max_jdim() const;

    /// Grid accessors.
    const std::vector<int>& grid_sizes() const { return grid_sizes_; }
    std::vector<int> coords(Elem a) const;
    Elem at_coords(const std::vector<int>& c) const;

    /// Power set accessors.
    const std::vector<std::string>& universe() const { return universe_; }
    std::uint64_t mask(Elem a) const;
    Elem at_mask(std::uint64_t m) const;

    std::string name(Elem a) const;
    std::optional<Elem> find(const std::string& name) const;

    /// Key for the canonical element order: (jdim-level, repr).
    std::vector<int> repr_key(Elem a) const;
    /// Carrier sorted by (jdim-level, lexicographic repr). For
    /// non-distributive lattices the level is 0 for bottom, 1 for
    /// join-irreducibles and 2 otherwise.
    const std::vector<Elem>& canonical_order() const { return canonical_order_; }
    bool canonical_less(Elem a, Elem b) const { return canonical_rank_[a] < canonical_rank_[b]; }

    /// All v <= x with jdim(v) <= k, in canonical order. For non-distributive
    /// lattices only k <= 1 is supported (bottom and join-irreducibles).
    std::vector<Elem> below_with_jdim_at_most(Elem x, int k) const;
    /// Level used by below_with_jdim_at_most: jdim when distributive.
    int jdim_level(Elem v) const;

private:
    FiniteLattice() = default;
    void finalize();

    LatticeKind kind_ = LatticeKind::Explicit;
    int size_ = 0;
    Elem bottom_ = 0;

    // Grid
    std::vector<int> grid_sizes_;
    std::vector<int> grid_strides_;

    // PowerSet
    std::vector<std::string> universe_;

    // Explicit
    std::vector<std::string> names_;
    std::vector<uint8_t> leq_;  // size_ * size_
    std::vector<Elem> join_table_, meet_table_;

    std::vector<std::pair<Elem, Elem>> cover_pairs_;
    std::vector<std::vector<Elem>> up_, down_;
    bool distributive_ = true;
    std::optional<std::array<Elem, 3>> dist_witness_;
    std::vector<uint8_t> join_irr_;
    std::vector<Elem> join_irreducibles_;
    std::vector<int> jdim_;  // -1 marks "not computed" (non-distributive)
    int max_jdim_ = 0;
    std::vector<Elem> canonical_order_;
    std::vector<int> canonical_rank_;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

LatticePtr make_grid(std::vector<int> sizes);
LatticePtr make_power_set(std::vector<std::string> universe);
LatticePtr make_explicit(std::vector<std::string> names,
                         const std::vector<std::pair<std::string, std::string>>& covers);

/// The five-element modular non-distributive lattice (diamond).
LatticePtr make_m3();
/// The five-element non-modular lattice (pentagon).
LatticePtr make_n5();

/// Searches for a sublattice isomorphic to the diamond (three incomparable
/// elements with equal pairwise joins and equal pairwise meets).
std::optional<std::array<Elem, 5>> find_m3_sublattice(const FiniteLattice& L);
/// Searches for a pentagon sublattice.
std::optional<std::array<Elem, 5>> find_n5_sublattice(const FiniteLattice& L);

} // namespace posetcalc
