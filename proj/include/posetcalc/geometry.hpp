#pragma once

#include "posetcalc/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace posetcalc {

/// Finite labelled point cloud with exact rational coordinates.
struct PointCloud {
    int dim = 0;
    std::vector<std::vector<Rat>> pts;
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(pts.size()); }
};

PointCloud make_cloud(std::vector<std::vector<Rat>> pts, std::vector<std::string> labels = {});

Rat dist_squared(const std::vector<Rat>& a, const std::vector<Rat>& b);

struct Ball {
    std::vector<Rat> center;
    Rat r2 = -1;  // negative marks the empty ball

    bool empty() const { return r2 < 0; }
    bool contains(const std::vector<Rat>& p) const {
        return !empty() && dist_squared(center, p) <= r2;
    }
};

/// Smallest ball with the given affinely independent points on its boundary.
/// Returns nothing when the points are affinely dependent.
std::optional<Ball> circumball(const std::vector<std::vector<Rat>>& pts);

/// Exact smallest enclosing ball, by move-to-front recursion over boundary
/// sets of at most d+1 points.
Ball min_enclosing_ball(const std::vector<std::vector<Rat>>& pts);

/// Max squared pairwise distance.
Rat diameter_squared(const std::vector<std::vector<Rat>>& pts);

} // namespace posetcalc
