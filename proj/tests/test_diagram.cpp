#include <doctest.h>

#include "posetcalc/codegree.hpp"
#include "posetcalc/fixtures.hpp"
#include "posetcalc/generators.hpp"

using namespace posetcalc;

namespace {
using F2 = PrimeField;

template <class F>
VectDiagram<F> constant_vect_diagram(LatticePtr L, F field, int d) {
    VectDiagram<F> D;
    D.L = L;
    D.field = field;
    D.dim.assign(L->size(), d);
    for (auto [a, b] : L->cover_pairs()) D.set_edge(a, b, Matrix<F>::identity(field, d));
    return D;
}
} // namespace

TEST_CASE("fixture diagrams are functorial") {
    F2 f2(2);
    CHECK(validate(corner_skyscraper_diagram(f2)).ok());
    CHECK(validate(upper_corner_diagram(f2)).ok());
    CHECK(validate(direct_sum_diagram(f2)).ok());
    CHECK(validate(sphere_pushout_diagram(f2)).ok());
    CHECK(validate(diamond_skyscraper_diagram(f2)).ok());
    CHECK(validate(pentagon_skyscraper_diagram(f2)).ok());
    CHECK(validate(cardinality_diagram(3)).ok());
}

TEST_CASE("validation reports the failing square") {
    F2 f2(2);
    auto D = constant_vect_diagram(make_grid({2, 2}), f2, 1);
    const FiniteLattice& L = *D.L;
    // break one edge: the square no longer commutes
    D.set_edge(L.at_coords({0, 1}), L.at_coords({1, 1}), Matrix<F2>(f2, 1, 1));
    auto rep = validate(D);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.size() == 1);
    CHECK(rep.violations[0].find("(0,0)") != std::string::npos);
}

TEST_CASE("monotonicity validation for ordered diagrams") {
    RealDiagram D;
    D.L = make_grid({2, 2});
    D.value = {ExtReal(0), ExtReal(1), ExtReal(2), ExtReal(3)};
    CHECK(validate(D).ok());
    D.value[D.L->at_coords({1, 1})] = ExtReal(Rat(1, 2));
    auto rep = validate(D);
    CHECK(rep.violations.size() == 2);  // both edges into the top now decrease
}

TEST_CASE("codegree of the worked square examples") {
    F2 f2(2);
    auto corner = corner_skyscraper_diagram(f2);
    CHECK(is_codegree(corner, 1).holds);

    auto upper = upper_corner_diagram(f2);
    auto res = is_codegree(upper, 1);
    REQUIRE_FALSE(res.holds);
    REQUIRE(res.witness.has_value());
    const FiniteLattice& L = *upper.L;
    CHECK(res.witness->apex == L.at_coords({1, 1}));
    CHECK(res.witness->parts ==
          std::vector<Elem>{L.at_coords({0, 1}), L.at_coords({1, 0})});
    CHECK(is_codegree(upper, 2).holds);

    CHECK(is_codegree(direct_sum_diagram(f2), 1).holds);
}

TEST_CASE("codegree lower bounds") {
    F2 f2(2);
    CHECK(codegree_lower_bound(upper_corner_diagram(f2)) == 2);
    CHECK(codegree_lower_bound(direct_sum_diagram(f2)) == 1);
    CHECK(codegree_lower_bound(constant_vect_diagram(make_grid({3, 3}), f2, 2)) == 0);
}

TEST_CASE("every diagram on a product of two chains is codegree 2") {
    F2 f2(2);
    Rng rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        auto D = random_vect_diagram(make_grid({trial % 2 ? 2 : 3, 3}), f2, 3, rng);
        CHECK(is_codegree(D, 2).holds);
    }
}

TEST_CASE("codegree is upward closed") {
    F2 f2(2);
    Rng rng(13);
    std::vector<LatticePtr> lattices = {make_grid({2, 2}), make_power_set({"a", "b", "c"}),
                                        make_grid({2, 2, 2})};
    for (const auto& L : lattices)
        for (int trial = 0; trial < 6; ++trial) {
            auto D = random_vect_diagram(L, f2, 3, rng);
            int bound = L->max_jdim();
            int first = -1;
            for (int n = 0; n <= bound; ++n)
                if (is_codegree(D, n).holds) { first = n; break; }
            REQUIRE(first >= 0);
            for (int n = first; n <= bound; ++n) CHECK(is_codegree(D, n).holds);
        }
}

TEST_CASE("axes with isomorphism edges lower the codegree") {
    F2 f2(2);
    Rng rng(19);
    // pull a random diagram on one axis back along the projection of a
    // 2-axis grid; the second axis acts by isomorphisms
    auto line = random_vect_diagram(make_grid({3}), f2, 3, rng);
    VectDiagram<F2> D;
    D.L = make_grid({3, 3});
    D.field = f2;
    const FiniteLattice& L = *D.L;
    D.dim.assign(L.size(), 0);
    for (Elem x = 0; x < L.size(); ++x) D.dim[x] = line.dim[L.coords(x)[0]];
    for (auto [a, b] : L.cover_pairs()) {
        int ax = L.coords(a)[0], bx = L.coords(b)[0];
        D.set_edge(a, b, ax == bx ? Matrix<F2>::identity(f2, D.dim[a])
                                  : line.edge_map(ax, bx));
    }
    REQUIRE(validate(D).ok());
    CHECK(is_codegree(D, 1).holds);  // 2 axes minus 1 independent axis
}

TEST_CASE("ordered-target codegree is a supremum test") {
    auto card = cardinality_diagram(3);
    CHECK_FALSE(is_codegree(card, 1).holds);
    CHECK_FALSE(is_codegree(card, 2).holds);
    CHECK(is_codegree(card, 3).holds);
    auto res = is_codegree(card, 2);
    REQUIRE(res.witness.has_value());
    CHECK(card.L->jdim(res.witness->apex) == 3);

    // tolerance: perturb one value within the allowed slack
    RealDiagram D;
    D.L = make_grid({2, 2});
    D.value = {ExtReal(0), ExtReal(1), ExtReal(1), ExtReal(Rat(1))};
    CHECK(is_codegree(D, 1).holds);
    D.value[3] = ExtReal(Rat(1) + Rat(1, 1000000000000));
    CHECK_FALSE(is_codegree(D, 1).holds);
    CHECK(is_codegree(D, 1, Rat(1, 1000000000)).holds);
}

TEST_CASE("skipping non-reduced covers does not change the decision") {
    F2 f2(2);
    Rng rng(29);
    std::vector<LatticePtr> lattices = {make_grid({2, 2}), make_grid({2, 3}),
                                        make_power_set({"a", "b", "c"}),
                                        make_grid({2, 2, 2})};
    for (const auto& L : lattices) {
        REQUIRE(L->size() <= 16);
        for (int trial = 0; trial < 4; ++trial) {
            auto D = random_vect_diagram(L, f2, 3, rng);
            for (int n = 0; n <= 2; ++n)
                CHECK(is_codegree(D, n, true).holds == is_codegree(D, n, false).holds);
        }
        auto R = random_real_diagram(L, rng);
        for (int n = 0; n <= 2; ++n)
            CHECK(is_codegree(R, n, Rat(0), true).holds ==
                  is_codegree(R, n, Rat(0), false).holds);
    }
}

TEST_CASE("composite maps follow canonical covering paths") {
    F2 f2(2);
    Rng rng(37);
    auto D = random_vect_diagram(make_grid({3, 3}), f2, 3, rng);
    const FiniteLattice& L = *D.L;
    Elem lo = L.at_coords({0, 0}), hi = L.at_coords({2, 2});
    auto direct = D.map(lo, hi);
    auto mid = L.at_coords({1, 1});
    CHECK(D.map(mid, hi) * D.map(lo, mid) == direct);
}
