#include "spectral_perturb/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spectral_perturb::graph {

namespace {

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.first == e.second) throw InputError("graph: self-loop");
        if (e.first >= n_ || e.second >= n_) {
            std::ostringstream os;
            os << "graph: edge (" << e.first << "," << e.second << ") out of range for n = " << n_;
            throw InputError(os.str());
        }
        e = normalized(e);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("graph: duplicate edge");
}

Graph Graph::complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph Graph::path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, std::move(e));
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(e));
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    return std::binary_search(edges_.begin(), edges_.end(), normalized({u, v}));
}

std::size_t Graph::degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) {
        return e.first == v || e.second == v;
    }));
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++d[u];
        ++d[v];
    }
    return d;
}

Graph Graph::complement() const {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) e.emplace_back(u, v);
    return Graph(n_, std::move(e));
}

Graph Graph::without_edge(Edge e) const {
    e = normalized(e);
    std::vector<Edge> rest;
    std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(rest), [&](const Edge& x) { return x != e; });
    if (rest.size() == edges_.size()) throw InputError("graph: edge to delete is not present");
    return Graph(n_, std::move(rest));
}

Graph Graph::with_edge(Edge e) const {
    std::vector<Edge> more = edges_;
    more.push_back(e);
    return Graph(n_, std::move(more));
}

std::size_t Graph::component_count() const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n_;
    for (const auto& [u, v] : edges_) {
        const std::size_t ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return components;
}

EdgeVector edge_vector(std::size_t n, Edge e) {
    if (e.first == e.second || e.first >= n || e.second >= n) throw InputError("edge_vector: invalid edge");
    EdgeVector out{e, Vector(n, 0.0)};
    out.i_e[e.first] = -1.0;
    out.i_e[e.second] = 1.0;
    return out;
}

Matrix incidence(const Graph& g) {
    Matrix inc(g.n(), g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        inc(g.edges()[k].first, k) = 1.0;
        inc(g.edges()[k].second, k) = -1.0;
    }
    return inc;
}

SymmetricMatrix laplacian(const Graph& g) {
    SymmetricMatrix l(g.n());
    for (const auto& [u, v] : g.edges()) {
        l.add(u, u, 1.0);
        l.add(v, v, 1.0);
        l.add(u, v, -1.0);
    }
    return l;
}

double algebraic_connectivity(const Graph& g) {
    if (g.n() < 2) throw InputError("algebraic connectivity needs n >= 2");
    const Spectrum s = jacobi_eigen(laplacian(g));
    return s.eigenvalues[g.n() - 2];
}

double connectivity_lower_from_complement(const Graph& g) {
    if (g.n() < 2) throw InputError("complement bound needs n >= 2");
    return static_cast<double>(g.n()) - jacobi_eigen(laplacian(g.complement())).largest();
}

bounds::BoundReport edge_append_bound(const Graph& g, Edge e) {
    if (!g.has_edge(e.first, e.second)) throw InputError("edge_append_bound: edge is not in the graph");
    const std::size_t n = g.n();
    const Graph gc = g.complement();

    // L_{G^c + e} = [i_e, I] [i_e, I]^t shares its nonzero spectrum with the
    // bordered Gram [[i_e^t i_e, i_e^t I], [I^t i_e, I^t I]]; the nonzero
    // spectrum of I^t I is that of L_{G^c}.
    const Matrix inc = incidence(gc);
    const EdgeVector ie = edge_vector(n, e);
    const Vector a = inc.transpose() * std::span<const double>(ie.i_e);
    const double c = dot(ie.i_e, ie.i_e);
    const double lambda1 = gc.edge_count() == 0 ? 0.0 : jacobi_eigen(laplacian(gc)).largest();

    bounds::LiLiInputs in;
    in.lambda1 = lambda1;
    in.c = c;
    in.a_norm = norm2(a);
    in.a_dot_v1 = 0.0;  // only the upper side is used
    const double top = *bounds::lili_two_sided(in).upper;

    bounds::BoundReport r;
    r.method = "edge_deletion_connectivity";
    r.lower = static_cast<double>(n) - top;
    r.with_exact(algebraic_connectivity(g.without_edge(e)));
    return r;
}

std::vector<Graph> all_graphs(std::size_t n) {
    std::vector<Edge> slots;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    if (slots.size() > 20) throw InputError("all_graphs: n too large for enumeration");
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << slots.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1U) e.push_back(slots[k]);
        out.emplace_back(n, std::move(e));
    }
    return out;
}

}  // namespace spectral_perturb::graph
