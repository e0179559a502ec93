#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spectral_perturb/bounds.hpp"
#include "spectral_perturb/linalg.hpp"

namespace spectral_perturb::graph {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph. Edges are stored normalized (u < v) and sorted,
/// so two graphs with the same edge set compare equal.
class Graph {
public:
    Graph() = default;
    /// Throws InputError on self-loops, duplicates or out-of-range endpoints.
    Graph(std::size_t n, std::vector<Edge> edges);

    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    std::vector<std::size_t> degrees() const;

    Graph complement() const;
    Graph without_edge(Edge e) const;
    Graph with_edge(Edge e) const;

    /// Connected components via union-find.
    std::size_t component_count() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// i_e for e = (u, v): -1 at u, +1 at v, zero elsewhere.
struct EdgeVector {
    Edge e;
    Vector i_e;
};

EdgeVector edge_vector(std::size_t n, Edge e);

/// n x |E| incidence matrix; the lower-indexed endpoint of each edge is the
/// positive end.
Matrix incidence(const Graph& g);

/// Degree matrix minus adjacency matrix.
SymmetricMatrix laplacian(const Graph& g);

/// Second-smallest Laplacian eigenvalue. Requires n >= 2.
double algebraic_connectivity(const Graph& g);

/// n - lambda_1(L of the complement), a lower bound on the algebraic connectivity.
double connectivity_lower_from_complement(const Graph& g);

/// Lower bound on a(G - e) for an edge e of G. Deleting e from G appends it to
/// the complement, whose Laplacian is the bordered matrix with c = 2 and
/// a = I_{G^c}^t i_e; the Li-Li upper bound on its top eigenvalue is turned
/// into a connectivity bound by the complement inequality. `exact` holds the
/// oracle value of a(G - e).
bounds::BoundReport edge_append_bound(const Graph& g, Edge e);

/// Every simple graph on n vertices (2^(n(n-1)/2) of them), in bitmask order.
std::vector<Graph> all_graphs(std::size_t n);

}  // namespace spectral_perturb::graph
