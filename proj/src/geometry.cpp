#include "posetcalc/geometry.hpp"

#include <stdexcept>

namespace posetcalc {

PointCloud make_cloud(std::vector<std::vector<Rat>> pts, std::vector<std::string> labels) {
    PointCloud c;
    if (pts.empty()) throw std::invalid_argument("point cloud must be nonempty");
    c.dim = static_cast<int>(pts[0].size());
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != c.dim)
            throw std::invalid_argument("points have mixed ambient dimensions");
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw std::invalid_argument("duplicate points in cloud");
    if (labels.empty())
        for (size_t i = 0; i < pts.size(); ++i) labels.push_back("p" + std::to_string(i));
    if (labels.size() != pts.size())
        throw std::invalid_argument("label count does not match point count");
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw std::invalid_argument("duplicate point label '" + labels[i] + "'");
    c.pts = std::move(pts);
    c.labels = std::move(labels);
    return c;
}

Rat dist_squared(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        Rat d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

std::optional<Ball> circumball(const std::vector<std::vector<Rat>>& pts) {
    if (pts.empty()) return Ball{};
    const size_t m = pts.size() - 1;
    const size_t d = pts[0].size();
    // center = p0 + sum lambda_i (p_i - p0) with 2 G lambda = b,
    // G the Gram matrix of the difference vectors
    std::vector<std::vector<Rat>> diff(m, std::vector<Rat>(d));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < d; ++j) diff[i][j] = pts[i + 1][j] - pts[0][j];
    std::vector<std::vector<Rat>> g(m, std::vector<Rat>(m + 1, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            Rat s = 0;
            for (size_t t = 0; t < d; ++t) s += diff[i][t] * diff[j][t];
            g[i][j] = 2 * s;
        }
        Rat s = 0;
        for (size_t t = 0; t < d; ++t) s += diff[i][t] * diff[i][t];
        g[i][m] = s;
    }
    // Gaussian elimination; a singular Gram matrix means affine dependence
    for (size_t col = 0; col < m; ++col) {
        size_t pivot = col;
        while (pivot < m && g[pivot][col] == 0) ++pivot;
        if (pivot == m) return std::nullopt;
        std::swap(g[pivot], g[col]);
        for (size_t row = 0; row < m; ++row) {
            if (row == col || g[row][col] == 0) continue;
            Rat f = g[row][col] / g[col][col];
            for (size_t t = col; t <= m; ++t) g[row][t] -= f * g[col][t];
        }
    }
    Ball b;
    b.center = pts[0];
    for (size_t i = 0; i < m; ++i) {
        Rat lambda = g[i][m] / g[i][i];
        for (size_t t = 0; t < d; ++t) b.center[t] += lambda * diff[i][t];
    }
    b.r2 = dist_squared(b.center, pts[0]);
    return b;
}

namespace {

Ball ball_of_boundary(const std::vector<std::vector<Rat>>& boundary) {
    if (boundary.empty()) return Ball{};
    auto b = circumball(boundary);
    if (!b) throw std::logic_error("degenerate boundary set in enclosing-ball recursion");
    return *b;
}

Ball welzl(std::vector<std::vector<Rat>>& pts, size_t n, std::vector<std::vector<Rat>>& boundary,
           size_t dim) {
    if (n == 0 || boundary.size() == dim + 1) return ball_of_boundary(boundary);
    auto p = pts[n - 1];
    Ball b = welzl(pts, n - 1, boundary, dim);
    if (b.contains(p)) return b;
    boundary.push_back(p);
    b = welzl(pts, n - 1, boundary, dim);
    boundary.pop_back();
    // move-to-front keeps boundary candidates early
    for (size_t i = n - 1; i > 0; --i) pts[i] = pts[i - 1];
    pts[0] = p;
    return b;
}

} // namespace

Ball min_enclosing_ball(const std::vector<std::vector<Rat>>& pts) {
    if (pts.empty()) return Ball{};
    auto work = pts;
    std::vector<std::vector<Rat>> boundary;
    return welzl(work, work.size(), boundary, pts[0].size());
}

Rat diameter_squared(const std::vector<std::vector<Rat>>& pts) {
    Rat best = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            Rat d = dist_squared(pts[i], pts[j]);
            if (d > best) best = d;
        }
    return best;
}

} // namespace posetcalc
