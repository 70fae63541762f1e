#pragma once

#include "posetcalc/taylor.hpp"

namespace posetcalc {

/// Coordinates attached to a grid lattice: axis index i sits at the real
/// value axis_values[axis][i]. Index 0 sits at 0 and values strictly
/// increase, modelling a finite grid of critical values in the positive
/// orthant.
struct GridAnnotation {
    std::vector<std::vector<Rat>> axis_values;
};

inline GridAnnotation default_annotation(const FiniteLattice& grid) {
    GridAnnotation a;
    for (int s : grid.grid_sizes()) {
        std::vector<Rat> axis;
        for (int i = 0; i < s; ++i) axis.emplace_back(i);
        a.axis_values.push_back(std::move(axis));
    }
    return a;
}

inline void validate_annotation(const FiniteLattice& grid, const GridAnnotation& a) {
    if (a.axis_values.size() != grid.grid_sizes().size())
        throw std::invalid_argument("annotation arity mismatch");
    for (size_t i = 0; i < a.axis_values.size(); ++i) {
        const auto& axis = a.axis_values[i];
        if (static_cast<int>(axis.size()) != grid.grid_sizes()[i])
            throw std::invalid_argument("annotation length mismatch on an axis");
        if (axis.empty() || axis[0] != 0)
            throw std::invalid_argument("annotation must start at 0");
        for (size_t j = 1; j < axis.size(); ++j)
            if (!(axis[j] > axis[j - 1]))
                throw std::invalid_argument("annotation values must strictly increase");
    }
}

/// Monotone inflationary self-map of a grid, acting independently per axis.
struct Translation {
    LatticePtr L;
    std::vector<std::vector<int>> table;  // per axis: index -> image index

    Elem apply(Elem x) const {
        auto c = L->coords(x);
        for (size_t i = 0; i < c.size(); ++i) c[i] = table[i][c[i]];
        return L->at_coords(c);
    }

    Translation composed_with(const Translation& inner) const {
        Translation t;
        t.L = L;
        t.table = inner.table;
        for (size_t i = 0; i < table.size(); ++i)
            for (auto& v : t.table[i]) v = table[i][v];
        return t;
    }

    Translation squared() const { return composed_with(*this); }

    /// True when every axis fixes index 0, so supports and hence
    /// join-dimensions never grow.
    bool preserves_dimension() const {
        for (const auto& axis : table)
            if (!axis.empty() && axis[0] != 0) return false;
        return true;
    }

    bool is_identity() const {
        for (const auto& axis : table)
            for (size_t i = 0; i < axis.size(); ++i)
                if (axis[i] != static_cast<int>(i)) return false;
        return true;
    }
};

inline void validate_translation(const Translation& t) {
    if (t.L->kind() != LatticeKind::Grid)
        throw std::invalid_argument("translations act on grid lattices");
    if (t.table.size() != t.L->grid_sizes().size())
        throw std::invalid_argument("translation arity mismatch");
    for (size_t i = 0; i < t.table.size(); ++i) {
        const auto& axis = t.table[i];
        if (static_cast<int>(axis.size()) != t.L->grid_sizes()[i])
            throw std::invalid_argument("translation table length mismatch");
        for (size_t j = 0; j < axis.size(); ++j) {
            if (axis[j] < static_cast<int>(j) || axis[j] >= static_cast<int>(axis.size()))
                throw std::invalid_argument("translation must be inflationary and in range");
            if (j && axis[j] < axis[j - 1])
                throw std::invalid_argument("translation must be monotone");
        }
    }
}

/// Shift by a fixed index vector, clamped at the top of each axis.
inline Translation shift_translation(LatticePtr grid, const std::vector<int>& delta) {
    Translation t;
    t.L = grid;
    const auto& sizes = grid->grid_sizes();
    if (delta.size() != sizes.size()) throw std::invalid_argument("shift arity mismatch");
    for (size_t i = 0; i < sizes.size(); ++i) {
        std::vector<int> axis(sizes[i]);
        for (int j = 0; j < sizes[i]; ++j) axis[j] = std::min(j + delta[i], sizes[i] - 1);
        t.table.push_back(std::move(axis));
    }
    validate_translation(t);
    return t;
}

/// Multiplicative translation on an annotated grid: index i moves to the
/// largest index whose value is at most scale * value(i). The scale is
/// e^epsilon, kept rational for exactness; scale 1 is the identity and
/// composition multiplies scales (up to the downward rounding, which makes
/// the family superlinear rather than strictly multiplicative).
inline Translation lambda_translation(LatticePtr grid, const GridAnnotation& a,
                                      const Rat& scale) {
    if (scale < 1) throw std::invalid_argument("multiplicative scale must be >= 1");
    validate_annotation(*grid, a);
    Translation t;
    t.L = grid;
    for (const auto& axis : a.axis_values) {
        std::vector<int> tab(axis.size());
        for (size_t i = 0; i < axis.size(); ++i) {
            Rat target = scale * axis[i];
            size_t j = axis.size() - 1;
            while (axis[j] > target) --j;
            tab[i] = static_cast<int>(j);
        }
        t.table.push_back(std::move(tab));
    }
    validate_translation(t);
    return t;
}

/// Pair of families of maps witnessing an interleaving along a translation.
template <class F>
struct InterleavingCertificate {
    Translation gamma;
    std::vector<Matrix<F>> phi;  // phi[x] : F(x) -> G(gamma x)
    std::vector<Matrix<F>> psi;  // psi[x] : G(x) -> F(gamma x)
};

struct CertificateReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Exact check of the naturality squares and both composite conditions.
template <class F>
CertificateReport verify_certificate(const VectDiagram<F>& Fd, const VectDiagram<F>& Gd,
                                     const InterleavingCertificate<F>& cert) {
    CertificateReport rep;
    const FiniteLattice& L = *Fd.L;
    const Translation& g = cert.gamma;
    auto g2 = g.squared();
    for (Elem x = 0; x < L.size(); ++x) {
        if (cert.phi[x].rows() != Gd.dim[g.apply(x)] || cert.phi[x].cols() != Fd.dim[x])
            rep.violations.push_back("phi at " + L.name(x) + " has the wrong shape");
        if (cert.psi[x].rows() != Fd.dim[g.apply(x)] || cert.psi[x].cols() != Gd.dim[x])
            rep.violations.push_back("psi at " + L.name(x) + " has the wrong shape");
    }
    if (!rep.ok()) return rep;
    for (auto [a, b] : L.cover_pairs()) {
        if (!(cert.phi[b] * Fd.edge_map(a, b) ==
              Gd.map(g.apply(a), g.apply(b)) * cert.phi[a]))
            rep.violations.push_back("phi naturality fails on " + L.name(a) + " <= " +
                                     L.name(b));
        if (!(cert.psi[b] * Gd.edge_map(a, b) ==
              Fd.map(g.apply(a), g.apply(b)) * cert.psi[a]))
            rep.violations.push_back("psi naturality fails on " + L.name(a) + " <= " +
                                     L.name(b));
    }
    for (Elem x = 0; x < L.size(); ++x) {
        if (!(cert.psi[g.apply(x)] * cert.phi[x] == Fd.map(x, g2.apply(x))))
            rep.violations.push_back("psi o phi misses the double translation at " + L.name(x));
        if (!(cert.phi[g.apply(x)] * cert.psi[x] == Gd.map(x, g2.apply(x))))
            rep.violations.push_back("phi o psi misses the double translation at " + L.name(x));
    }
    return rep;
}

/// The pullback of F along a translation, with the tautological certificate
/// interleaving the two.
template <class F>
std::pair<VectDiagram<F>, InterleavingCertificate<F>> pullback_interleaving(
    const VectDiagram<F>& Fd, const Translation& g) {
    const FiniteLattice& L = *Fd.L;
    VectDiagram<F> Gd;
    Gd.L = Fd.L;
    Gd.field = Fd.field;
    Gd.dim.assign(L.size(), 0);
    for (Elem x = 0; x < L.size(); ++x) Gd.dim[x] = Fd.dim[g.apply(x)];
    for (auto [a, b] : L.cover_pairs())
        Gd.set_edge(a, b, Fd.map(g.apply(a), g.apply(b)));

    InterleavingCertificate<F> cert;
    cert.gamma = g;
    auto g2 = g.squared();
    for (Elem x = 0; x < L.size(); ++x) {
        cert.phi.push_back(Fd.map(x, g2.apply(x)));
        cert.psi.push_back(Matrix<F>::identity(Fd.field, Fd.dim[g.apply(x)]));
    }
    return {std::move(Gd), std::move(cert)};
}

/// Certificate between the codegree-k approximations induced by the colimit
/// universal property. Requires the translation to preserve join-dimension
/// levels, which multiplicative translations do.
template <class F>
InterleavingCertificate<F> induced_taylor_certificate(const VectDiagram<F>& Fd,
                                                      const VectDiagram<F>& Gd,
                                                      const InterleavingCertificate<F>& cert,
                                                      const VectTaylorLayer<F>& TF,
                                                      const VectTaylorLayer<F>& TG) {
    const FiniteLattice& L = *Fd.L;
    const Translation& g = cert.gamma;
    if (!g.preserves_dimension())
        throw std::invalid_argument(
            "translation does not preserve the small-dimension strata");
    InterleavingCertificate<F> out;
    out.gamma = g;
    auto build = [&](const VectTaylorLayer<F>& Tsrc, const VectTaylorLayer<F>& Tdst,
                     const VectDiagram<F>& src, const std::vector<Matrix<F>>& maps,
                     Elem x) {
        Elem gx = g.apply(x);
        Matrix<F> q(src.field, Tdst.approx.dim[gx], Tsrc.colim[x].offset.back());
        int c = 0;
        for (Elem v : Tsrc.index_set[x]) {
            Elem gv = g.apply(v);
            auto it = std::find(Tdst.index_set[gx].begin(), Tdst.index_set[gx].end(), gv);
            if (it == Tdst.index_set[gx].end())
                throw std::logic_error("translated index element missing from target stratum");
            q.insert_block(0, c,
                           Tdst.colim[gx].legs[it - Tdst.index_set[gx].begin()] * maps[v]);
            c += src.dim[v];
        }
        return detail::factor_through_colimit(Tsrc.colim[x], q);
    };
    for (Elem x = 0; x < L.size(); ++x) {
        out.phi.push_back(build(TF, TG, Fd, cert.phi, x));
        out.psi.push_back(build(TG, TF, Gd, cert.psi, x));
    }
    return out;
}

template <class F>
InterleavingCertificate<F> induced_taylor_certificate(const VectDiagram<F>& Fd,
                                                      const VectDiagram<F>& Gd,
                                                      const InterleavingCertificate<F>& cert,
                                                      int k) {
    return induced_taylor_certificate(Fd, Gd, cert, taylor(Fd, k), taylor(Gd, k));
}

} // namespace posetcalc
