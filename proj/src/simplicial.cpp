#include "posetcalc/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace posetcalc {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0;
    for (int v : a) {
        while (i < b.size() && b[i] < v) ++i;
        if (i == b.size() || b[i] != v) return false;
        ++i;
    }
    return true;
}

std::vector<std::vector<int>> to_antichain(std::vector<std::vector<int>> faces) {
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < faces.size() && !dominated; ++j)
            if (i != j && faces[i] != faces[j] && subset_of(faces[i], faces[j])) dominated = true;
        if (!dominated) out.push_back(faces[i]);
    }
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::from_maximal(std::vector<std::string> vertex_labels,
                                                  const std::vector<std::vector<int>>& faces) {
    SimplicialComplex X;
    X.labels_ = std::move(vertex_labels);
    for (const auto& f : faces)
        for (int v : f)
            if (v < 0 || v >= static_cast<int>(X.labels_.size()))
                throw std::invalid_argument("simplex vertex out of range");
    X.maximal_ = to_antichain(faces);
    return X;
}

SimplicialComplex SimplicialComplex::from_maximal_labels(
    std::vector<std::string> vertex_labels, const std::vector<std::vector<std::string>>& faces) {
    std::vector<std::vector<int>> idx_faces;
    for (const auto& f : faces) {
        std::vector<int> g;
        for (const auto& name : f) {
            auto it = std::find(vertex_labels.begin(), vertex_labels.end(), name);
            if (it == vertex_labels.end())
                throw std::invalid_argument("unknown vertex '" + name + "'");
            g.push_back(static_cast<int>(it - vertex_labels.begin()));
        }
        idx_faces.push_back(std::move(g));
    }
    return from_maximal(std::move(vertex_labels), idx_faces);
}

SimplicialComplex SimplicialComplex::full_simplex(int n_vertices) {
    std::vector<std::string> labels;
    std::vector<int> all;
    for (int i = 0; i < n_vertices; ++i) {
        labels.push_back(std::to_string(i));
        all.push_back(i);
    }
    return from_maximal(std::move(labels), {all});
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : maximal_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::contains(const std::vector<int>& s) const {
    if (s.empty()) return true;
    for (const auto& f : maximal_)
        if (subset_of(s, f)) return true;
    return false;
}

std::vector<std::vector<std::vector<int>>> SimplicialComplex::simplices_by_dim(
    size_t budget) const {
    std::set<std::vector<int>> seen;
    for (const auto& f : maximal_) {
        const size_t m = f.size();
        if (m > 26) throw std::runtime_error("maximal simplex too large to enumerate");
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> s;
            for (size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            seen.insert(std::move(s));
            if (seen.size() > budget)
                throw std::runtime_error("simplex enumeration exceeds budget");
        }
    }
    std::vector<std::vector<std::vector<int>>> by_dim;
    for (const auto& s : seen) {
        size_t d = s.size() - 1;
        if (by_dim.size() <= d) by_dim.resize(d + 1);
        by_dim[d].push_back(s);
    }
    return by_dim;
}

size_t SimplicialComplex::simplex_count(size_t budget) const {
    auto by_dim = simplices_by_dim(budget);
    size_t n = 0;
    for (const auto& level : by_dim) n += level.size();
    return n;
}

SimplicialComplex SimplicialComplex::skeleton(int n) const {
    std::vector<std::vector<int>> faces;
    for (const auto& f : maximal_) {
        if (static_cast<int>(f.size()) <= n + 1) {
            faces.push_back(f);
            continue;
        }
        // all (n+1)-element subsets
        std::vector<int> pick(n + 1);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == n + 1) {
                faces.emplace_back(pick.begin(), pick.end());
                return;
            }
            for (int i = start; i < static_cast<int>(f.size()); ++i) {
                pick[depth] = f[i];
                rec(i + 1, depth + 1);
            }
        };
        if (n >= 0) rec(0, 0);
    }
    SimplicialComplex X;
    X.labels_ = labels_;
    X.maximal_ = to_antichain(faces);
    return X;
}

bool SimplicialComplex::is_n_coskeletal(int n) const {
    const int V = vertex_count();
    if (V > 20) throw std::runtime_error("universe too large for the coskeletal scan");
    for (std::uint32_t mask = 1; mask < (1u << V); ++mask) {
        if (__builtin_popcount(mask) <= n + 1) continue;
        std::vector<int> s;
        for (int i = 0; i < V; ++i)
            if (mask & (1u << i)) s.push_back(i);
        if (contains(s)) continue;
        // some face with at most n+1 vertices must already be missing
        bool missing_small_face = false;
        std::vector<int> pick;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (missing_small_face) return;
            if (!pick.empty() && static_cast<int>(pick.size()) <= n + 1 && !contains(pick))
                missing_small_face = true;
            if (static_cast<int>(pick.size()) == n + 1) return;
            for (size_t i = start; i < s.size() && !missing_small_face; ++i) {
                pick.push_back(s[i]);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
        if (!missing_small_face) return false;
    }
    return true;
}

SimplicialComplex SimplicialComplex::coskeleton_approx(int n) const {
    const int V = vertex_count();
    if (V > 20) throw std::runtime_error("universe too large for the coskeletal scan");
    std::vector<std::vector<int>> faces;
    for (std::uint32_t mask = 1; mask < (1u << V); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < V; ++i)
            if (mask & (1u << i)) s.push_back(i);
        bool all_small_faces_in = true;
        std::vector<int> pick;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (!all_small_faces_in) return;
            if (!pick.empty() && !contains(pick)) {
                all_small_faces_in = false;
                return;
            }
            if (static_cast<int>(pick.size()) == n) return;
            for (size_t i = start; i < s.size() && all_small_faces_in; ++i) {
                pick.push_back(s[i]);
                rec(i + 1);
                pick.pop_back();
            }
        };
        if (n >= 1) rec(0);
        if (all_small_faces_in) faces.push_back(s);
    }
    SimplicialComplex X;
    X.labels_ = labels_;
    X.maximal_ = to_antichain(faces);
    return X;
}

OrderedDiagram<BitVec> span_diagram(const SimplicialComplex& X) {
    const int V = X.vertex_count();
    if (V > 12) throw std::runtime_error("universe too large for the span diagram");
    OrderedDiagram<BitVec> D;
    D.L = make_power_set(X.labels());
    const int width = 1 << V;
    D.value.assign(D.L->size(), BitVec(width));
    // membership of each subset, then restrict to the spanning set
    std::vector<uint8_t> member(width, 0);
    for (int m = 0; m < width; ++m) {
        std::vector<int> s;
        for (int i = 0; i < V; ++i)
            if (m & (1 << i)) s.push_back(i);
        member[m] = X.contains(s);
    }
    for (Elem U = 0; U < D.L->size(); ++U) {
        auto mask = static_cast<std::uint32_t>(D.L->mask(U));
        for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(width); ++m)
            if (member[m] && (m & ~mask) == 0) D.value[U].set(static_cast<int>(m));
    }
    return D;
}

SimplicialComplex spanned_subcomplex(const SimplicialComplex& X, const std::vector<int>& verts) {
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> faces;
    for (const auto& f : X.maximal()) {
        std::vector<int> g;
        for (int v : f)
            if (std::binary_search(sorted.begin(), sorted.end(), v)) g.push_back(v);
        if (!g.empty()) faces.push_back(g);
    }
    return SimplicialComplex::from_maximal(X.labels(), faces);
}

SimplicialComplex hom_complex(const SimplicialComplex& X, const SimplicialComplex& Y,
                              size_t vertex_cap, size_t simplex_budget) {
    const int nx = X.vertex_count();
    std::vector<int> used;  // vertices of X that actually occur
    for (int v = 0; v < nx; ++v)
        if (X.vertex_in(v)) used.push_back(v);

    // vertices of the result: simplicial maps, found by assigning image
    // vertices along `used` with early simplex checks
    std::vector<std::vector<int>> maps;
    std::vector<int> assign(nx, -1);
    std::function<void(size_t)> enumerate = [&](size_t idx) {
        if (idx == used.size()) {
            maps.push_back(assign);
            if (maps.size() > vertex_cap)
                throw std::runtime_error("simplicial map enumeration exceeds the vertex cap");
            return;
        }
        const int v = used[idx];
        for (int w = 0; w < Y.vertex_count(); ++w) {
            if (!Y.vertex_in(w)) continue;
            assign[v] = w;
            bool ok = true;
            for (const auto& f : X.maximal()) {
                std::vector<int> img;
                bool relevant = false;
                for (int u : f) {
                    if (assign[u] < 0) continue;
                    if (u == v) relevant = true;
                    img.push_back(assign[u]);
                }
                if (!relevant) continue;
                std::sort(img.begin(), img.end());
                img.erase(std::unique(img.begin(), img.end()), img.end());
                if (!Y.contains(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok) enumerate(idx + 1);
        }
        assign[v] = -1;
    };
    enumerate(0);

    std::vector<std::string> labels;
    for (const auto& mp : maps) {
        std::string name;
        bool first = true;
        for (int v : used) {
            if (!first) name += ",";
            name += X.labels()[v] + ">" + Y.labels()[mp[v]];
            first = false;
        }
        labels.push_back("[" + name + "]");
    }

    auto compatible = [&](const std::vector<int>& chosen) {
        for (const auto& f : X.maximal()) {
            std::vector<int> img;
            for (int mi : chosen)
                for (int u : f) img.push_back(maps[mi][u]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!Y.contains(img)) return false;
        }
        return true;
    };

    // grow simplices level by level; the rule is downward closed
    std::vector<std::vector<int>> faces;
    size_t count = 0;
    std::vector<std::vector<int>> level;
    for (size_t i = 0; i < maps.size(); ++i) level.push_back({static_cast<int>(i)});
    while (!level.empty()) {
        count += level.size();
        if (count > simplex_budget)
            throw std::runtime_error("mapping complex exceeds the simplex budget");
        std::vector<std::vector<int>> next;
        for (const auto& s : level) {
            bool extended = false;
            for (int g = s.back() + 1; g < static_cast<int>(maps.size()); ++g) {
                std::vector<int> t = s;
                t.push_back(g);
                if (compatible(t)) {
                    next.push_back(std::move(t));
                    extended = true;
                }
            }
            if (!extended) faces.push_back(s);
        }
        level = std::move(next);
    }
    return SimplicialComplex::from_maximal(std::move(labels), faces);
}

SimplicialComplex product_complex(const SimplicialComplex& X, const SimplicialComplex& Y) {
    const int ny = Y.vertex_count();
    std::vector<std::string> labels;
    for (int i = 0; i < X.vertex_count(); ++i)
        for (int j = 0; j < ny; ++j) labels.push_back(X.labels()[i] + "*" + Y.labels()[j]);
    std::vector<std::vector<int>> faces;
    for (const auto& fx : X.maximal())
        for (const auto& fy : Y.maximal()) {
            std::vector<int> f;
            for (int a : fx)
                for (int b : fy) f.push_back(a * ny + b);
            faces.push_back(std::move(f));
        }
    return SimplicialComplex::from_maximal(std::move(labels), faces);
}

SimplicialComplex random_complex(std::vector<std::string> vertex_labels, Rng& rng,
                                 double density) {
    const int V = static_cast<int>(vertex_labels.size());
    std::vector<uint8_t> in(1u << V, 0);
    in[0] = 1;
    std::vector<std::uint32_t> order;
    for (std::uint32_t m = 1; m < (1u << V); ++m) order.push_back(m);
    std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (auto m : order) {
        bool closed = true;
        for (int i = 0; i < V && closed; ++i)
            if ((m & (1u << i)) && !in[m & ~(1u << i)]) closed = false;
        if (closed && rng.chance(density)) in[m] = 1;
    }
    std::vector<std::vector<int>> faces;
    for (std::uint32_t m = 1; m < (1u << V); ++m) {
        if (!in[m]) continue;
        std::vector<int> s;
        for (int i = 0; i < V; ++i)
            if (m & (1u << i)) s.push_back(i);
        faces.push_back(std::move(s));
    }
    return SimplicialComplex::from_maximal(std::move(vertex_labels), faces);
}

std::vector<SimplicialComplex> all_complexes_on(std::vector<std::string> vertex_labels) {
    const int V = static_cast<int>(vertex_labels.size());
    if (V > 4) throw std::invalid_argument("exhaustive complex enumeration capped at 4 vertices");
    std::vector<std::uint32_t> order;
    for (std::uint32_t m = 1; m < (1u << V); ++m) order.push_back(m);
    std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<SimplicialComplex> out;
    std::vector<uint8_t> in(1u << V, 0);
    in[0] = 1;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == order.size()) {
            std::vector<std::vector<int>> faces;
            for (std::uint32_t m = 1; m < (1u << V); ++m) {
                if (!in[m]) continue;
                std::vector<int> s;
                for (int i = 0; i < V; ++i)
                    if (m & (1u << i)) s.push_back(i);
                faces.push_back(std::move(s));
            }
            out.push_back(SimplicialComplex::from_maximal(vertex_labels, faces));
            return;
        }
        std::uint32_t m = order[idx];
        // excluded
        in[m] = 0;
        rec(idx + 1);
        // included, when downward closed
        bool closed = true;
        for (int i = 0; i < V && closed; ++i)
            if ((m & (1u << i)) && !in[m & ~(1u << i)]) closed = false;
        if (closed) {
            in[m] = 1;
            rec(idx + 1);
            in[m] = 0;
        }
    };
    rec(0);
    return out;
}

} // namespace posetcalc
