#pragma once

#include "posetcalc/interleaving.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <tuple>

namespace posetcalc {

/// Interval summand of a one-parameter module: alive on the index range
/// [birth, death] inclusive. With an annotation this reads as the value
/// interval [a(birth), a(death+1)), right end infinite when the bar
/// survives the last index.
struct Bar {
    int birth = 0;
    int death = 0;

    friend bool operator==(const Bar& a, const Bar& b) {
        return a.birth == b.birth && a.death == b.death;
    }
    friend bool operator<(const Bar& a, const Bar& b) {
        return std::tie(a.birth, a.death) < std::tie(b.birth, b.death);
    }
};

/// Barcode of a module over a single totally ordered axis, by a left-to-right
/// sweep. A basis of surviving bars is carried along; images are reduced in
/// birth order so that older bars persist (the elder rule), dead columns
/// close their bar, and the cokernel opens new bars.
template <class F>
std::vector<Bar> barcode_1d(const VectDiagram<F>& D) {
    const FiniteLattice& L = *D.L;
    if (L.kind() != LatticeKind::Grid || L.grid_sizes().size() != 1)
        throw std::invalid_argument("barcodes require a single-axis grid");
    const int m = L.size();
    const F& K = D.field;

    std::vector<Bar> bars;
    std::vector<int> birth;              // per active column
    Matrix<F> basis(K, D.dim[0], D.dim[0]);
    for (int i = 0; i < D.dim[0]; ++i) {
        basis(i, i) = K.one();
        birth.push_back(0);
    }

    for (int i = 0; i + 1 < m; ++i) {
        auto img = D.edge_map(i, i + 1) * basis;
        // stable order: bars were appended in birth order already
        Matrix<F> kept(K, D.dim[i + 1], static_cast<int>(birth.size()));
        std::vector<int> kept_birth;
        std::vector<int> pivot_of_row(D.dim[i + 1], -1);
        int kept_cols = 0;
        for (int c = 0; c < img.cols(); ++c) {
            std::vector<typename F::Elem> col(D.dim[i + 1]);
            for (int r = 0; r < D.dim[i + 1]; ++r) col[r] = img(r, c);
            // reduce against the pivots of older surviving bars
            for (int r = 0; r < D.dim[i + 1]; ++r) {
                if (K.is_zero(col[r]) || pivot_of_row[r] < 0) continue;
                const int pc = pivot_of_row[r];
                auto factor = K.mul(col[r], K.inv(kept(r, pc)));
                for (int rr = 0; rr < D.dim[i + 1]; ++rr)
                    col[rr] = K.sub(col[rr], K.mul(factor, kept(rr, pc)));
            }
            int lead = -1;
            for (int r = 0; r < D.dim[i + 1]; ++r)
                if (!K.is_zero(col[r])) { lead = r; break; }
            if (lead < 0) {
                bars.push_back({birth[c], i});
                continue;
            }
            for (int r = 0; r < D.dim[i + 1]; ++r) kept(r, kept_cols) = col[r];
            pivot_of_row[lead] = kept_cols;
            kept_birth.push_back(birth[c]);
            ++kept_cols;
        }
        // complete to a basis of the next space; the fresh directions open bars
        Matrix<F> next(K, D.dim[i + 1], D.dim[i + 1]);
        std::vector<int> next_birth;
        for (int c = 0; c < kept_cols; ++c) {
            for (int r = 0; r < D.dim[i + 1]; ++r) next(r, c) = kept(r, c);
            next_birth.push_back(kept_birth[c]);
        }
        int filled = kept_cols;
        for (int e = 0; e < D.dim[i + 1] && filled < D.dim[i + 1]; ++e) {
            next(e, filled) = K.one();
            Matrix<F> probe = next.block(0, 0, D.dim[i + 1], filled + 1);
            if (rank(probe) == filled + 1) {
                next_birth.push_back(i + 1);
                ++filled;
            } else {
                next(e, filled) = K.zero();
            }
        }
        basis = std::move(next);
        birth = std::move(next_birth);
    }
    for (size_t c = 0; c < birth.size(); ++c) bars.push_back({birth[c], m - 1});
    std::sort(bars.begin(), bars.end());
    return bars;
}

/// Cost (1/2) * ln(arg); infinite when no finite translation works.
struct LogCost {
    bool infinite = false;
    Rat arg = 1;  // >= 1

    static LogCost inf() { return {true, 0}; }
    double value() const { return infinite ? std::numeric_limits<double>::infinity()
                                           : 0.5 * std::log(to_double(arg)); }
    friend bool operator<(const LogCost& a, const LogCost& b) {
        if (a.infinite || b.infinite) return !a.infinite && b.infinite;
        return a.arg < b.arg;
    }
    friend bool operator==(const LogCost& a, const LogCost& b) {
        return a.infinite == b.infinite && (a.infinite || a.arg == b.arg);
    }
    friend bool operator<=(const LogCost& a, const LogCost& b) { return a < b || a == b; }
};

namespace detail {

struct BarEndpoints {
    Rat birth;      // annotation value at the left end
    bool death_inf = false;
    Rat death;      // annotation value just past the right end

    static BarEndpoints of(const Bar& b, const std::vector<Rat>& axis) {
        BarEndpoints e;
        e.birth = axis[b.birth];
        if (b.death + 1 < static_cast<int>(axis.size()))
            e.death = axis[b.death + 1];
        else
            e.death_inf = true;
        return e;
    }
};

inline LogCost ratio_cost(const Rat& a, const Rat& b) {  // |ln(a/b)|, as a full log
    if (a == b) return {false, 1};
    if (a == 0 || b == 0) return LogCost::inf();
    Rat r = a > b ? a / b : b / a;
    return {false, r * r};  // squared: costs carry (1/2) ln
}

inline LogCost match_cost(const BarEndpoints& x, const BarEndpoints& y) {
    LogCost birth = ratio_cost(x.birth, y.birth);
    LogCost death;
    if (x.death_inf || y.death_inf)
        death = (x.death_inf && y.death_inf) ? LogCost{false, 1} : LogCost::inf();
    else
        death = ratio_cost(x.death, y.death);
    return death < birth ? birth : death;
}

inline LogCost delete_cost(const BarEndpoints& x) {
    if (x.death_inf) return LogCost::inf();
    if (x.birth == 0) return x.death == 0 ? LogCost{false, 1} : LogCost::inf();
    return {false, x.death / x.birth};
}

/// Augmenting-path bipartite matching over edges allowed at threshold T.
inline bool feasible(const std::vector<std::vector<LogCost>>& match,
                     const std::vector<LogCost>& del1, const std::vector<LogCost>& del2,
                     const LogCost& T) {
    const int n1 = static_cast<int>(del1.size());
    const int n2 = static_cast<int>(del2.size());
    // left nodes: bars of the first module and one slack per bar of the second
    const int left = n1 + n2, right = n2 + n1;
    auto allowed = [&](int l, int r) {
        bool l_bar = l < n1, r_bar = r < n2;
        if (l_bar && r_bar) return match[l][r] <= T;
        if (l_bar && !r_bar) return r - n2 == l && del1[l] <= T;
        if (!l_bar && r_bar) return l - n1 == r && del2[r] <= T;
        return true;  // slack pairs with slack freely
    };
    std::vector<int> match_of_right(right, -1);
    std::function<bool(int, std::vector<uint8_t>&)> augment = [&](int l,
                                                                  std::vector<uint8_t>& seen) {
        for (int r = 0; r < right; ++r) {
            if (seen[r] || !allowed(l, r)) continue;
            seen[r] = 1;
            if (match_of_right[r] < 0 || augment(match_of_right[r], seen)) {
                match_of_right[r] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < left; ++l) {
        std::vector<uint8_t> seen(right, 0);
        if (!augment(l, seen)) return false;
    }
    return true;
}

} // namespace detail

/// Bottleneck matching distance on log-scaled interval endpoints: the exact
/// multiplicative interleaving distance for interval-decomposable
/// one-parameter modules.
template <class F>
LogCost multiplicative_distance_1d(const VectDiagram<F>& Fd, const VectDiagram<F>& Gd,
                                   const GridAnnotation& annotation) {
    validate_annotation(*Fd.L, annotation);
    if (!(Fd.L->grid_sizes() == Gd.L->grid_sizes()))
        throw std::invalid_argument("modules must share their index grid");
    const auto& axis = annotation.axis_values[0];
    std::vector<detail::BarEndpoints> e1, e2;
    for (const auto& b : barcode_1d(Fd)) e1.push_back(detail::BarEndpoints::of(b, axis));
    for (const auto& b : barcode_1d(Gd)) e2.push_back(detail::BarEndpoints::of(b, axis));

    std::vector<std::vector<LogCost>> match(e1.size(), std::vector<LogCost>(e2.size()));
    std::vector<LogCost> del1, del2;
    std::vector<LogCost> candidates = {{false, 1}};
    for (size_t i = 0; i < e1.size(); ++i)
        for (size_t j = 0; j < e2.size(); ++j) {
            match[i][j] = detail::match_cost(e1[i], e2[j]);
            if (!match[i][j].infinite) candidates.push_back(match[i][j]);
        }
    for (const auto& e : e1) {
        del1.push_back(detail::delete_cost(e));
        if (!del1.back().infinite) candidates.push_back(del1.back());
    }
    for (const auto& e : e2) {
        del2.push_back(detail::delete_cost(e));
        if (!del2.back().infinite) candidates.push_back(del2.back());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& T : candidates)
        if (detail::feasible(match, del1, del2, T)) return T;
    return LogCost::inf();
}

} // namespace posetcalc
