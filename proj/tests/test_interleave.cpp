#include <doctest.h>

#include "posetcalc/barcode.hpp"
#include "posetcalc/generators.hpp"

using namespace posetcalc;

namespace {
using F2 = PrimeField;

/// One-parameter module supported on an index interval.
template <class F>
VectDiagram<F> interval_module(LatticePtr L, F field, int lo, int hi) {
    VectDiagram<F> D;
    D.L = L;
    D.field = field;
    D.dim.assign(L->size(), 0);
    for (int i = lo; i <= hi; ++i) D.dim[i] = 1;
    for (auto [a, b] : L->cover_pairs())
        D.set_edge(a, b, D.dim[a] && D.dim[b] ? Matrix<F>::identity(field, 1)
                                              : Matrix<F>(field, D.dim[b], D.dim[a]));
    return D;
}

/// Number of bars alive across the whole index range [i, j].
int bars_alive(const std::vector<Bar>& bars, int i, int j) {
    int c = 0;
    for (const auto& b : bars)
        if (b.birth <= i && j <= b.death) ++c;
    return c;
}
} // namespace

TEST_CASE("multiplicative translations on annotated grids") {
    auto L = make_grid({5});
    GridAnnotation a{{{Rat(0), Rat(1), Rat(2), Rat(4), Rat(8)}}};
    validate_annotation(*L, a);

    auto id = lambda_translation(L, a, Rat(1));
    CHECK(id.is_identity());

    auto dbl = lambda_translation(L, a, Rat(2));
    CHECK(dbl.table[0] == std::vector<int>{0, 2, 3, 4, 4});
    CHECK(dbl.preserves_dimension());

    // rounding keeps the family superlinear: applying twice never overtakes
    // the doubled scale
    auto quad = lambda_translation(L, a, Rat(4));
    auto twice = dbl.squared();
    for (int i = 0; i < L->size(); ++i) CHECK(twice.table[0][i] <= quad.table[0][i]);

    // a fractional scale rounds down
    auto three_halves = lambda_translation(L, a, Rat(3, 2));
    CHECK(three_halves.table[0] == std::vector<int>{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(lambda_translation(L, a, Rat(1, 2)), std::invalid_argument);
    GridAnnotation bad{{{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)}}};
    CHECK_THROWS_AS(validate_annotation(*L, bad), std::invalid_argument);
}

TEST_CASE("identity certificates verify") {
    F2 f2(2);
    Rng rng(7);
    auto L = make_grid({3, 3});
    auto D = random_vect_diagram(L, f2, 3, rng);
    InterleavingCertificate<F2> cert;
    cert.gamma = shift_translation(L, {0, 0});
    for (Elem x = 0; x < L->size(); ++x) {
        cert.phi.push_back(Matrix<F2>::identity(f2, D.dim[x]));
        cert.psi.push_back(Matrix<F2>::identity(f2, D.dim[x]));
    }
    CHECK(verify_certificate(D, D, cert).ok());
}

TEST_CASE("pullback certificates verify and perturbations fail") {
    F2 f2(2);
    Rng rng(11);
    auto L = make_grid({4, 3});
    GridAnnotation a{{{Rat(0), Rat(1), Rat(2), Rat(4)}, {Rat(0), Rat(1), Rat(3)}}};
    auto D = random_vect_diagram(L, f2, 3, rng);
    auto g = lambda_translation(L, a, Rat(2));
    auto [G, cert] = pullback_interleaving(D, g);
    REQUIRE(validate(G).ok());
    CHECK(verify_certificate(D, G, cert).ok());

    // flip one matrix entry of a nonempty component
    auto broken = cert;
    bool flipped = false;
    for (Elem x = 0; x < L->size() && !flipped; ++x)
        if (broken.phi[x].rows() > 0 && broken.phi[x].cols() > 0) {
            auto v = broken.phi[x](0, 0);
            broken.phi[x](0, 0) = f2.is_zero(v) ? f2.one() : f2.zero();
            flipped = true;
        }
    if (flipped) {
        auto rep = verify_certificate(D, G, broken);
        CHECK_FALSE(rep.ok());
        CHECK(rep.violations.size() >= 1);
    }
}

TEST_CASE("certificates induce certificates between approximations") {
    F2 f2(2);
    Rng rng(13);
    auto L = make_grid({3, 3});
    GridAnnotation a{{{Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(2), Rat(3)}}};
    for (int trial = 0; trial < 5; ++trial) {
        auto D = random_vect_diagram(L, f2, 3, rng);
        auto g = lambda_translation(L, a, trial % 2 ? Rat(2) : Rat(3, 2));
        auto [G, cert] = pullback_interleaving(D, g);
        REQUIRE(verify_certificate(D, G, cert).ok());
        for (int k = 1; k <= 2; ++k) {
            auto TF = taylor(D, k);
            auto TG = taylor(G, k);
            auto ind = induced_taylor_certificate(D, G, cert, TF, TG);
            CHECK(verify_certificate(TF.approx, TG.approx, ind).ok());
            // the induced maps restrict to the originals through the comparisons
            for (Elem x = 0; x < L->size(); ++x) {
                Elem gx = g.apply(x);
                CHECK(TG.eps[gx] * ind.phi[x] == cert.phi[x] * TF.eps[x]);
                CHECK(TF.eps[gx] * ind.psi[x] == cert.psi[x] * TG.eps[x]);
            }
        }
    }
}

TEST_CASE("dimension-raising translations are rejected") {
    F2 f2(2);
    Rng rng(17);
    auto L = make_grid({3, 3});
    auto D = random_vect_diagram(L, f2, 2, rng);
    auto g = shift_translation(L, {1, 0});
    CHECK_FALSE(g.preserves_dimension());
    auto [G, cert] = pullback_interleaving(D, g);
    CHECK(verify_certificate(D, G, cert).ok());
    CHECK_THROWS_AS(induced_taylor_certificate(D, G, cert, 1), std::invalid_argument);
}

TEST_CASE("barcodes of interval modules") {
    F2 f2(2);
    auto L = make_grid({4});
    auto D = interval_module(L, f2, 1, 2);
    auto bars = barcode_1d(D);
    REQUIRE(bars.size() == 1);
    CHECK(bars[0] == Bar{1, 2});

    // a full-length module never dies
    auto full = interval_module(L, f2, 0, 3);
    auto full_bars = barcode_1d(full);
    REQUIRE(full_bars.size() == 1);
    CHECK(full_bars[0] == Bar{0, 3});
}

TEST_CASE("barcodes reproduce the rank function") {
    F2 f2(2);
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        auto L = make_grid({rng.uniform(2, 6)});
        auto D = random_vect_diagram(L, f2, 4, rng);
        auto bars = barcode_1d(D);
        for (int i = 0; i < L->size(); ++i)
            for (int j = i; j < L->size(); ++j)
                CHECK(rank(D.map(i, j)) == bars_alive(bars, i, j));
    }
}

TEST_CASE("multiplicative distances between interval modules") {
    F2 f2(2);
    auto L = make_grid({4});
    GridAnnotation a{{{Rat(0), Rat(1), Rat(2), Rat(4)}}};

    auto m1 = interval_module(L, f2, 1, 2);  // value interval [1, 4)
    auto m2 = interval_module(L, f2, 2, 2);  // value interval [2, 4)
    CHECK(multiplicative_distance_1d(m1, m1, a) == LogCost{false, Rat(1)});
    auto d = multiplicative_distance_1d(m1, m2, a);
    CHECK(d == LogCost{false, Rat(4)});  // cost ln 2
    CHECK(d.value() == doctest::Approx(std::log(2.0)));
}

TEST_CASE("distance bounds compose along chains of modules") {
    F2 f2(2);
    Rng rng(29);
    auto L = make_grid({5});
    GridAnnotation a{{{Rat(0), Rat(1), Rat(2), Rat(3), Rat(5)}}};
    for (int trial = 0; trial < 20; ++trial) {
        auto F1 = random_vect_diagram(L, f2, 3, rng);
        auto G1 = random_vect_diagram(L, f2, 3, rng);
        auto H1 = random_vect_diagram(L, f2, 3, rng);
        auto dfg = multiplicative_distance_1d(F1, G1, a);
        auto dgh = multiplicative_distance_1d(G1, H1, a);
        auto dfh = multiplicative_distance_1d(F1, H1, a);
        if (!dfg.infinite && !dgh.infinite) {
            REQUIRE_FALSE(dfh.infinite);
            CHECK(dfh.arg <= dfg.arg * dgh.arg);
        }
    }
}
