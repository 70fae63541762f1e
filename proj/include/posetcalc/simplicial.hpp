#pragma once

#include "posetcalc/bitvec.hpp"
#include "posetcalc/chain.hpp"
#include "posetcalc/generators.hpp"
#include "posetcalc/lattice.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace posetcalc {

/// Finite abstract simplicial complex over an ordered vertex universe.
/// Stored sparsely as the antichain of maximal simplices; the empty simplex
/// always belongs. Vertices of the universe need not appear in any simplex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Faces may be given redundantly; they are closed into an antichain.
    static SimplicialComplex from_maximal(std::vector<std::string> vertex_labels,
                                          const std::vector<std::vector<int>>& faces);
    static SimplicialComplex from_maximal_labels(
        std::vector<std::string> vertex_labels,
        const std::vector<std::vector<std::string>>& faces);
    static SimplicialComplex full_simplex(int n_vertices);  // labels 0..n

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<int>>& maximal() const { return maximal_; }

    /// Largest simplex dimension; -1 for the complex {∅}.
    int dim() const;

    bool contains(const std::vector<int>& sorted_simplex) const;
    bool vertex_in(int v) const { return contains({v}); }

    /// All simplices grouped by dimension (index d holds the d-simplices,
    /// sorted). Throws when the count exceeds the budget.
    std::vector<std::vector<std::vector<int>>> simplices_by_dim(size_t budget = 2000000) const;
    size_t simplex_count(size_t budget = 2000000) const;

    SimplicialComplex skeleton(int n) const;
    bool is_n_skeletal(int n) const { return dim() <= n; }

    /// True when every missing simplex of size > n+1 already misses a face
    /// with at most n+1 vertices.
    bool is_n_coskeletal(int n) const;

    /// Simplices whose faces with at most n vertices all lie in the complex;
    /// the degree-n approximation from the coskeletal side.
    SimplicialComplex coskeleton_approx(int n) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.labels_ == b.labels_ && a.maximal_ == b.maximal_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
        return !(a == b);
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> maximal_;  // sorted simplices, sorted antichain
};

/// The functor U |-> (subcomplex of X spanned by U) on the power set of the
/// universe, encoded as membership bit vectors indexed by subset masks.
OrderedDiagram<BitVec> span_diagram(const SimplicialComplex& X);

/// Spanned subcomplex for one vertex set.
SimplicialComplex spanned_subcomplex(const SimplicialComplex& X, const std::vector<int>& verts);

/// Vertices are the simplicial maps X -> Y; a set of maps spans a simplex
/// when the union of their images on each simplex of X is a simplex of Y.
/// Vertex labels record the underlying vertex assignment.
SimplicialComplex hom_complex(const SimplicialComplex& X, const SimplicialComplex& Y,
                              size_t vertex_cap = 100000, size_t simplex_budget = 2000000);

/// Categorical product: vertex pairs, a set is a simplex when both
/// projections are.
SimplicialComplex product_complex(const SimplicialComplex& X, const SimplicialComplex& Y);

template <class F>
ChainComplex<F> simplicial_chain_complex(const SimplicialComplex& X, F field,
                                         size_t budget = 2000000) {
    auto by_dim = X.simplices_by_dim(budget);
    ChainComplex<F> c(field);
    if (by_dim.empty()) return c;
    c.lo = 0;
    for (const auto& level : by_dim) c.dims.push_back(static_cast<int>(level.size()));
    // boundary matrices with alternating signs over ascending vertex order
    for (int d = 0; d < static_cast<int>(by_dim.size()); ++d) {
        Matrix<F> m(field, d == 0 ? 0 : c.dims[d - 1], c.dims[d]);
        if (d > 0) {
            std::map<std::vector<int>, int> below;
            for (size_t i = 0; i < by_dim[d - 1].size(); ++i)
                below[by_dim[d - 1][i]] = static_cast<int>(i);
            for (size_t j = 0; j < by_dim[d].size(); ++j) {
                const auto& s = by_dim[d][j];
                for (size_t i = 0; i < s.size(); ++i) {
                    std::vector<int> face = s;
                    face.erase(face.begin() + i);
                    auto v = i % 2 ? field.neg(field.one()) : field.one();
                    m(below.at(face), static_cast<int>(j)) = v;
                }
            }
        }
        c.diffs.push_back(std::move(m));
    }
    return c;
}

/// Homology of the simplicial chain complex; unreduced, so degree zero
/// counts connected components.
template <class F>
std::map<int, int> simplicial_homology(const SimplicialComplex& X, F field,
                                       size_t budget = 2000000) {
    return simplicial_chain_complex(X, field, budget).homology();
}

/// Random downward-closed family on the given universe.
SimplicialComplex random_complex(std::vector<std::string> vertex_labels, Rng& rng,
                                 double density = 0.6);

/// Every simplicial complex on the given universe (all vertices need not be
/// used). Feasible for up to 4 vertices.
std::vector<SimplicialComplex> all_complexes_on(std::vector<std::string> vertex_labels);

} // namespace posetcalc
