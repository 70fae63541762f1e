#include <doctest.h>

#include "posetcalc/fixtures.hpp"
#include "posetcalc/generators.hpp"
#include "posetcalc/taylor.hpp"

using namespace posetcalc;

namespace {
using F2 = PrimeField;

/// Canonical comparison from the restricted-index colimit into the full one.
template <class F>
Matrix<F> fast_to_full(const VectDiagram<F>& D, const VectTaylorLayer<F>& fast,
                       const VectTaylorLayer<F>& full, Elem x) {
    Matrix<F> q(D.field, full.approx.dim[x], fast.colim[x].offset.back());
    int c = 0;
    for (Elem v : fast.index_set[x]) {
        auto it = std::find(full.index_set[x].begin(), full.index_set[x].end(), v);
        REQUIRE(it != full.index_set[x].end());
        q.insert_block(0, c, full.colim[x].legs[it - full.index_set[x].begin()]);
        c += D.dim[v];
    }
    auto sec = right_inverse(fast.colim[x].projection);
    REQUIRE(sec.has_value());
    return q * *sec;
}
} // namespace

TEST_CASE("codegree-1 approximation of the upper corner square") {
    F2 f2(2);
    auto D = upper_corner_diagram(f2);
    auto T = taylor(D, 1);
    const FiniteLattice& L = *D.L;
    Elem top = L.at_coords({1, 1});

    CHECK(T.approx.dim[top] == 2);
    CHECK(validate(T.approx).ok());
    // away from the top the comparison is an isomorphism
    for (Elem x = 0; x < L.size(); ++x)
        if (x != top) CHECK(is_isomorphism(T.eps[x]));

    // the approximated square is the direct-sum square up to isomorphism:
    // both incoming edges are injective with complementary images
    auto e1 = T.approx.edge_map(L.at_coords({0, 1}), top);
    auto e2 = T.approx.edge_map(L.at_coords({1, 0}), top);
    CHECK(rank(e1) == 1);
    CHECK(rank(e2) == 1);
    Matrix<F2> both(f2, 2, 2);
    both.insert_block(0, 0, e1);
    both.insert_block(0, 1, e2);
    CHECK(rank(both) == 2);

    // naturality of the comparison maps
    for (auto [a, b] : L.cover_pairs())
        CHECK(T.eps[b] * T.approx.edge_map(a, b) == D.edge_map(a, b) * T.eps[a]);
}

TEST_CASE("layer zero is constant at the bottom value") {
    F2 f2(2);
    Rng rng(3);
    auto D = random_vect_diagram(make_grid({2, 3}), f2, 3, rng);
    auto T = taylor(D, 0);
    for (Elem x = 0; x < D.L->size(); ++x) {
        CHECK(T.approx.dim[x] == D.dim[D.L->bottom()]);
    }
    for (auto [a, b] : D.L->cover_pairs()) CHECK(is_isomorphism(T.approx.edge_map(a, b)));
}

TEST_CASE("codegree-1 approximation of the zero-sphere square has circle homology") {
    F2 f2(2);
    auto D = sphere_pushout_diagram(f2);
    auto T = taylor(D, 1);
    const FiniteLattice& L = *D.L;
    Elem top = L.at_coords({1, 1});
    REQUIRE(validate(T.approx).ok());
    CHECK(T.approx.value[top].homology() == std::map<int, int>{{1, 1}});
    for (Elem x = 0; x < L.size(); ++x) {
        CHECK(T.eps[x].valid());
        if (x != top) CHECK(is_quasi_iso(T.eps[x]));
    }
    // the approximation of a codegree-1 diagram stays codegree 1
    CHECK(is_codegree(T.approx, 1).holds);
}

TEST_CASE("approximations of the non-distributive counterexamples fail") {
    F2 f2(2);
    auto M = diamond_skyscraper_diagram(f2);
    auto TM = taylor(M, 1);
    CHECK(TM.approx.dim[*M.L->find("a4")] == 3);
    auto repM = verify_approximation_codegree(M, 1);
    CHECK_FALSE(repM.holds);

    auto N = pentagon_skyscraper_diagram(f2);
    auto TN = taylor(N, 1);
    CHECK(TN.approx.dim[*N.L->find("b4")] == 2);
    CHECK_FALSE(verify_approximation_codegree(N, 1).holds);
}

TEST_CASE("approximation property holds on random space-valued diagrams") {
    F2 f2(2);
    Rng rng(11);
    std::vector<LatticePtr> lattices = {make_grid({2, 2}), make_grid({3, 3}),
                                        make_grid({2, 2, 2}), make_power_set({"a", "b", "c"})};
    for (const auto& L : lattices)
        for (int trial = 0; trial < 3; ++trial) {
            auto D = random_vect_diagram(L, f2, 3, rng);
            for (int k = 0; k <= 2; ++k) CHECK(verify_approximation_codegree(D, k).holds);
        }
}

TEST_CASE("approximation property holds for ordered diagrams") {
    Rng rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        auto D = random_real_diagram(make_power_set({"a", "b", "c"}), rng);
        for (int k = 0; k <= 2; ++k) {
            auto T = taylor(D, k);
            CHECK(is_codegree(T.approx, k).holds);
        }
    }
}

TEST_CASE("codegree diagrams are recovered by their approximation") {
    F2 f2(2);
    Rng rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        auto L = trial % 2 ? make_grid({2, 2, 2}) : make_power_set({"a", "b", "c"});
        int n = 1 + trial % 2;
        auto G = random_vect_diagram(L, f2, 3, rng);
        auto F = taylor(G, n).approx;
        REQUIRE(validate(F).ok());
        auto rep = verify_approximation_identity(F, n);
        CHECK(rep.precondition_ok);
        CHECK(rep.holds);
    }
}

TEST_CASE("identity verification refuses unverified preconditions") {
    F2 f2(2);
    auto rep = verify_approximation_identity(upper_corner_diagram(f2), 1);
    CHECK_FALSE(rep.precondition_ok);
    CHECK(rep.detail.find("precondition") != std::string::npos);
}

TEST_CASE("telescope stabilizes at the maximal join-dimension") {
    F2 f2(2);
    Rng rng(19);
    std::vector<LatticePtr> lattices = {make_grid({2, 2}), make_grid({3, 2}),
                                        make_power_set({"a", "b", "c"})};
    for (const auto& L : lattices) {
        auto D = random_vect_diagram(L, f2, 3, rng);
        int kmax = L->max_jdim();
        auto t = telescope(D, kmax);
        // the comparison triangle commutes strictly at every layer
        for (int k = 0; k < kmax; ++k)
            for (Elem x = 0; x < L->size(); ++x)
                CHECK(t.layers[k + 1].eps[x] * t.steps[k][x] == t.layers[k].eps[x]);
        // the last layer recovers the diagram exactly
        for (Elem x = 0; x < L->size(); ++x) {
            CHECK(t.layers[kmax].approx.dim[x] == D.dim[x]);
            CHECK(is_isomorphism(t.layers[kmax].eps[x]));
        }
        // elements of small dimension stabilize early
        for (int k = 0; k < kmax; ++k)
            for (Elem x = 0; x < L->size(); ++x)
                if (L->jdim(x) <= k) CHECK(is_isomorphism(t.layers[k].eps[x]));
    }
}

TEST_CASE("telescope of the cardinality functor matches the closed form") {
    auto D = cardinality_diagram(4);
    auto t = telescope(D, 4);
    const FiniteLattice& L = *D.L;
    for (int m = 0; m <= 4; ++m)
        for (Elem x = 0; x < L.size(); ++x) {
            int n = __builtin_popcount(static_cast<unsigned>(L.mask(x)));
            CHECK(t.layers[m].approx.value[x] == ExtReal(std::min(n, m)));
        }
}

TEST_CASE("constant diagrams have constant telescopes") {
    F2 f2(2);
    auto L = make_grid({2, 2});
    VectDiagram<F2> D;
    D.L = L;
    D.field = f2;
    D.dim.assign(4, 2);
    for (auto [a, b] : L->cover_pairs()) D.set_edge(a, b, Matrix<F2>::identity(f2, 2));
    for (int k = 0; k <= 2; ++k) {
        auto T = taylor(D, k);
        for (Elem x = 0; x < L->size(); ++x) {
            CHECK(T.approx.dim[x] == 2);
            CHECK(is_isomorphism(T.eps[x]));
        }
    }
}

TEST_CASE("restricted-index approximation agrees with the full one") {
    F2 f2(2);
    Rng rng(23);
    std::vector<LatticePtr> lattices = {make_grid({3, 3}), make_grid({2, 2, 2}),
                                        make_power_set({"a", "b", "c"})};
    for (const auto& L : lattices)
        for (int trial = 0; trial < 3; ++trial) {
            auto D = random_vect_diagram(L, f2, 3, rng);
            for (int k = 0; k <= 2; ++k) {
                auto full = taylor(D, k);
                auto fast = taylor_grid_fast(D, k);
                REQUIRE(validate(fast.approx).ok());
                for (Elem x = 0; x < L->size(); ++x) {
                    CHECK(fast.approx.dim[x] == full.approx.dim[x]);
                    CHECK(is_isomorphism(fast_to_full(D, fast, full, x)));
                }
                for (auto [a, b] : L->cover_pairs())
                    CHECK(fast_to_full(D, fast, full, b) * fast.approx.edge_map(a, b) ==
                          full.approx.edge_map(a, b) * fast_to_full(D, fast, full, a));
            }
        }
}

TEST_CASE("restricted-index approximation for ordered diagrams") {
    Rng rng(29);
    auto D = random_real_diagram(make_grid({3, 3}), rng);
    for (int k = 0; k <= 2; ++k) {
        auto full = taylor(D, k);
        auto fast = taylor_grid_fast(D, k);
        for (Elem x = 0; x < D.L->size(); ++x)
            CHECK(full.approx.value[x] == fast.approx.value[x]);
    }
}

TEST_CASE("restricted-index approximation for chain diagrams") {
    F2 f2(2);
    Rng rng(31);
    auto L = make_grid({2, 2});
    for (int trial = 0; trial < 3; ++trial) {
        auto D = random_chain_diagram(L, f2, 2, rng);
        REQUIRE(validate(D).ok());
        auto full = taylor(D, 1);
        for (Elem x = 0; x < L->size(); ++x) {
            auto fast = taylor_grid_fast_value(D, x, 1);
            auto incl = bar_inclusion(fast, full.bars[x], f2);
            CHECK(incl.valid());
            CHECK(is_quasi_iso(incl));
        }
    }
}

TEST_CASE("chain approximations converge at the maximal dimension") {
    F2 f2(2);
    Rng rng(37);
    std::vector<LatticePtr> lattices = {make_grid({2, 2}), make_power_set({"a", "b", "c"})};
    for (const auto& L : lattices) {
        auto D = random_chain_diagram(L, f2, 2, rng);
        auto T = taylor(D, L->max_jdim());
        for (Elem x = 0; x < L->size(); ++x) {
            CHECK(T.eps[x].valid());
            CHECK(is_quasi_iso(T.eps[x]));
        }
    }
}

TEST_CASE("the approximation is universal among codegree-n maps") {
    F2 f2(2);
    Rng rng(41);
    for (int trial = 0; trial < 4; ++trial) {
        auto L = trial % 2 ? make_grid({2, 2}) : make_power_set({"a", "b", "c"});
        int n = 1;
        auto Fd = random_vect_diagram(L, f2, 3, rng);
        auto TF = taylor(Fd, n);
        // G := T_n F is codegree n and zeta := eps maps it to F
        const auto& G = TF.approx;
        auto TG = taylor(G, n);
        auto Tzeta = taylor_of_transformation(G, Fd, TG, TF, TF.eps);
        for (Elem x = 0; x < L->size(); ++x) {
            auto inv_epsG = inverse(TG.eps[x]);
            REQUIRE(inv_epsG.has_value());
            auto upsilon = Tzeta[x] * *inv_epsG;
            CHECK(TF.eps[x] * upsilon == TF.eps[x]);
        }
    }
}

TEST_CASE("dual approximation of ordered diagrams takes infima") {
    auto D = cardinality_diagram(3);
    auto T1 = dual_degree(D, 1);
    const FiniteLattice& L = *D.L;
    // inf over {v <= x : jdim(v) <= 1} of |v| is 0 (the empty set is below x)
    for (Elem x = 0; x < L.size(); ++x) CHECK(T1.value[x] == ExtReal(0));
}
