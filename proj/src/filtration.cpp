#include "posetcalc/filtration.hpp"
#include <functional>

#include <algorithm>

namespace posetcalc {

FiltrationFunction make_filtration(LatticePtr power_set, std::vector<ExtReal> values,
                                   bool squared) {
    if (power_set->kind() != LatticeKind::PowerSet)
        throw std::invalid_argument("filtration functions live on a power set");
    if (static_cast<int>(values.size()) != power_set->size())
        throw std::invalid_argument("one value per subset required");
    FiltrationFunction f{std::move(power_set), std::move(values), squared};
    if (!(f.value[f.L->bottom()] == ExtReal(0)))
        throw std::invalid_argument("the empty set must sit at value 0");
    for (auto [a, b] : f.L->cover_pairs())
        if (!(f.value[a] <= f.value[b]))
            throw std::invalid_argument("filtration values must be monotone");
    return f;
}

namespace {
FiltrationFunction geometric_filtration(const PointCloud& cloud,
                                        const std::function<Rat(const std::vector<std::vector<Rat>>&)>& measure) {
    if (cloud.size() > 20) throw std::invalid_argument("cloud too large for subset enumeration");
    auto L = make_power_set(cloud.labels);
    std::vector<ExtReal> vals(L->size(), ExtReal(0));
    for (Elem u = 1; u < L->size(); ++u) {
        std::vector<std::vector<Rat>> pts;
        auto mask = L->mask(u);
        for (int i = 0; i < cloud.size(); ++i)
            if (mask & (1ull << i)) pts.push_back(cloud.pts[i]);
        vals[u] = ExtReal(measure(pts));
    }
    return make_filtration(L, std::move(vals), true);
}
} // namespace

FiltrationFunction cech_squared(const PointCloud& cloud) {
    return geometric_filtration(
        cloud, [](const std::vector<std::vector<Rat>>& pts) { return min_enclosing_ball(pts).r2; });
}

FiltrationFunction vr_squared(const PointCloud& cloud) {
    return geometric_filtration(cloud, diameter_squared);
}

SimplicialComplex sublevel_complex(const FiltrationFunction& f, const ExtReal& t) {
    std::vector<std::vector<int>> faces;
    const int V = static_cast<int>(f.L->universe().size());
    for (Elem u = 1; u < f.L->size(); ++u) {
        if (!(f.value[u] <= t)) continue;
        std::vector<int> s;
        for (int i = 0; i < V; ++i)
            if (f.L->mask(u) & (1ull << i)) s.push_back(i);
        faces.push_back(std::move(s));
    }
    return SimplicialComplex::from_maximal(f.L->universe(), faces);
}

std::vector<ExtReal> critical_values(const FiltrationFunction& f) {
    std::vector<ExtReal> vals;
    for (const auto& v : f.value)
        if (v.is_finite()) vals.push_back(v);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

VrIdentityReport verify_vr_identity(const PointCloud& cloud) {
    auto cech = cech_squared(cloud);
    auto vr = vr_squared(cloud);
    auto t2 = taylor_grid_fast(cech.as_diagram(), 2);
    VrIdentityReport rep;
    for (Elem u = 0; u < cech.L->size(); ++u) {
        ExtReal lhs = vr.value[u];
        ExtReal rhs = t2.approx.value[u];
        if (rhs.is_finite()) rhs.value *= 4;
        if (!(lhs == rhs)) {
            rep.holds = false;
            rep.mismatches.emplace_back(cech.L->mask(u), lhs, rhs);
        }
    }
    return rep;
}

CodegreeResult cech_codegree(const PointCloud& cloud, int n) {
    return is_codegree(cech_squared(cloud).as_diagram(), n);
}

} // namespace posetcalc
