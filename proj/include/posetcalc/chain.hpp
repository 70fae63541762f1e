#pragma once

#include "posetcalc/matrix.hpp"

#include <map>

namespace posetcalc {

/// Bounded chain complex of finite-dimensional spaces. dims[i] is the
/// dimension in degree lo+i and diffs[i] the boundary map out of degree
/// lo+i into degree lo+i-1 (so diffs[0] has zero rows).
template <class F>
struct ChainComplex {
    F field{};
    int lo = 0;
    std::vector<int> dims;
    std::vector<Matrix<F>> diffs;

    ChainComplex() = default;
    explicit ChainComplex(F f) : field(f) {}

    static ChainComplex zero(F f) { return ChainComplex(f); }

    /// Single copy of the field in degree n.
    static ChainComplex sphere(F f, int n) {
        ChainComplex c(f);
        c.lo = n;
        c.dims = {1};
        c.diffs = {Matrix<F>(f, 0, 1)};
        return c;
    }

    /// Field in degrees n and n-1 with identity boundary; acyclic.
    static ChainComplex disk(F f, int n) {
        ChainComplex c(f);
        c.lo = n - 1;
        c.dims = {1, 1};
        c.diffs = {Matrix<F>(f, 0, 1), Matrix<F>::identity(f, 1)};
        return c;
    }

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    int dim(int n) const {
        int i = n - lo;
        return (i >= 0 && i < static_cast<int>(dims.size())) ? dims[i] : 0;
    }
    Matrix<F> diff(int n) const {
        int i = n - lo;
        if (i >= 0 && i < static_cast<int>(dims.size())) return diffs[i];
        return Matrix<F>(field, dim(n - 1), dim(n));
    }
    int total_dim() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }

    bool valid() const {
        if (dims.size() != diffs.size()) return false;
        for (size_t i = 0; i < dims.size(); ++i) {
            int below = i == 0 ? 0 : dims[i - 1];
            if (diffs[i].rows() != below || diffs[i].cols() != dims[i]) return false;
        }
        for (size_t i = 1; i < dims.size(); ++i)
            if (!(diffs[i - 1] * diffs[i]).is_zero()) return false;
        return true;
    }

    /// Homology dimension per degree; only nonzero entries are reported.
    std::map<int, int> homology() const {
        std::map<int, int> h;
        for (int n = lo; n <= hi(); ++n) {
            int k = dim(n) - rank(diff(n)) - rank(diff(n + 1));
            if (k != 0) h[n] = k;
        }
        return h;
    }

    bool acyclic() const { return homology().empty(); }

    ChainComplex shifted(int by) const {
        ChainComplex c = *this;
        c.lo += by;
        return c;
    }

    static ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
        if (a.dims.empty()) return b;
        if (b.dims.empty()) return a;
        ChainComplex c(a.field);
        c.lo = std::min(a.lo, b.lo);
        int hi = std::max(a.hi(), b.hi());
        for (int n = c.lo; n <= hi; ++n) c.dims.push_back(a.dim(n) + b.dim(n));
        for (int n = c.lo; n <= hi; ++n) {
            Matrix<F> d(a.field, c.dim(n - 1), c.dim(n));
            d.insert_block(0, 0, a.diff(n));
            d.insert_block(a.dim(n - 1), a.dim(n), b.diff(n));
            c.diffs.push_back(std::move(d));
        }
        return c;
    }
};

/// Degree-indexed matrices; degrees with no entry are zero maps.
template <class F>
using GradedMaps = std::map<int, Matrix<F>>;

template <class F>
Matrix<F> graded_component(const GradedMaps<F>& g, const F& field, int n, int rows, int cols) {
    auto it = g.find(n);
    if (it == g.end()) return Matrix<F>(field, rows, cols);
    return it->second;
}

template <class F>
struct ChainMap {
    ChainComplex<F> source, target;
    GradedMaps<F> comps;

    Matrix<F> component(int n) const {
        return graded_component(comps, source.field, n, target.dim(n), source.dim(n));
    }

    bool valid() const {
        int lo = std::min(source.lo, target.lo);
        int hi = std::max(source.hi(), target.hi());
        for (int n = lo; n <= hi + 1; ++n) {
            auto c = component(n);
            if (c.rows() != target.dim(n) || c.cols() != source.dim(n)) return false;
            if (!(target.diff(n) * c == component(n - 1) * source.diff(n))) return false;
        }
        return true;
    }

    static ChainMap identity(const ChainComplex<F>& c) {
        ChainMap f;
        f.source = c;
        f.target = c;
        for (int n = c.lo; n <= c.hi(); ++n)
            if (c.dim(n) > 0) f.comps[n] = Matrix<F>::identity(c.field, c.dim(n));
        return f;
    }
};

/// Cone(f)_n = target_n (+) source_{n-1}; f is a quasi-isomorphism exactly
/// when its cone is acyclic.
template <class F>
ChainComplex<F> mapping_cone(const ChainMap<F>& f) {
    const F& K = f.source.field;
    ChainComplex<F> c(K);
    if (f.source.dims.empty() && f.target.dims.empty()) return c;
    int lo = std::min(f.target.dims.empty() ? f.source.lo + 1 : f.target.lo, f.source.lo + 1);
    int hi = std::max(f.target.dims.empty() ? f.source.hi() + 1 : f.target.hi(), f.source.hi() + 1);
    c.lo = lo;
    for (int n = lo; n <= hi; ++n) c.dims.push_back(f.target.dim(n) + f.source.dim(n - 1));
    for (int n = lo; n <= hi; ++n) {
        int rT = f.target.dim(n - 1), rS = f.source.dim(n - 2);
        int cT = f.target.dim(n), cS = f.source.dim(n - 1);
        Matrix<F> d(K, rT + rS, cT + cS);
        d.insert_block(0, 0, f.target.diff(n));
        d.insert_block(0, cT, f.component(n - 1));
        d.insert_block(rT, cT, f.source.diff(n - 1).negated());
        c.diffs.push_back(std::move(d));
    }
    return c;
}

template <class F>
bool is_quasi_iso(const ChainMap<F>& f) {
    return mapping_cone(f).acyclic();
}

} // namespace posetcalc
