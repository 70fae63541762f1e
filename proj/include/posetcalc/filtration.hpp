#pragma once

#include "posetcalc/codegree.hpp"
#include "posetcalc/geometry.hpp"
#include "posetcalc/simplicial.hpp"
#include "posetcalc/taylor.hpp"

namespace posetcalc {

/// Monotone function from the subsets of a finite vertex set into [0, inf],
/// the empty set at 0. Geometric constructions store squared values
/// (squared radius, squared diameter) so that everything stays rational;
/// `squared` records that convention.
struct FiltrationFunction {
    LatticePtr L;  // power set of the vertex universe
    std::vector<ExtReal> value;
    bool squared = false;

    RealDiagram as_diagram() const { return RealDiagram{L, value}; }

    ExtReal at_mask(std::uint64_t m) const { return value[L->at_mask(m)]; }
};

FiltrationFunction make_filtration(LatticePtr power_set, std::vector<ExtReal> values,
                                   bool squared = false);

/// Squared radius of the smallest enclosing ball per subset.
FiltrationFunction cech_squared(const PointCloud& cloud);

/// Squared diameter per subset.
FiltrationFunction vr_squared(const PointCloud& cloud);

/// Sublevel complex {sigma : f(sigma) <= t}; the threshold is in the same
/// scale as the stored values (squared for the geometric filtrations).
SimplicialComplex sublevel_complex(const FiltrationFunction& f, const ExtReal& t);

/// All distinct finite values, ascending.
std::vector<ExtReal> critical_values(const FiltrationFunction& f);

struct VrIdentityReport {
    bool holds = true;
    /// subsets where 4 * T_2(cech) and vr disagree, with both squared values
    std::vector<std::tuple<std::uint64_t, ExtReal, ExtReal>> mismatches;
};

/// The squared identity: diam^2(U) = 4 * (T_2 radius)^2(U) on every subset.
/// Squaring commutes with the suprema involved, so this is an exact
/// restatement of the identity between the plain values.
VrIdentityReport verify_vr_identity(const PointCloud& cloud);

/// Codegree of the enclosing-ball filtration; in ambient dimension d the
/// value d+1 always passes.
CodegreeResult cech_codegree(const PointCloud& cloud, int n);

} // namespace posetcalc
