#include "spectral_perturb/random_instances.hpp"

namespace spectral_perturb::random {

Vector gaussian_vector(SplitMix64& rng, std::size_t n) {
    Vector v(n);
    for (double& x : v) x = rng.normal();
    return v;
}

Matrix gaussian_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.normal();
    return m;
}

SymmetricMatrix gaussian_symmetric(SplitMix64& rng, std::size_t d) {
    return SymmetricMatrix::symmetrize(gaussian_matrix(rng, d, d));
}

BorderedSpec gaussian_spec(SplitMix64& rng, std::size_t d) {
    BorderedSpec spec;
    spec.m = gaussian_symmetric(rng, d);
    spec.a = gaussian_vector(rng, d);
    spec.c = rng.normal();
    return spec;
}

BorderedSpec gram_spec(SplitMix64& rng, std::size_t d, std::size_t rows) {
    const Matrix x = gaussian_matrix(rng, rows, d);
    const Vector col = gaussian_vector(rng, rows);
    return {gram(x), x.transpose() * std::span<const double>(col), dot(col, col)};
}

BorderedSpec low_rank_psd_spec(SplitMix64& rng, std::size_t d, std::size_t r) {
    const Matrix y = gaussian_matrix(rng, d, r);
    BorderedSpec spec;
    spec.m = outer_gram(y);
    spec.a = gaussian_vector(rng, d);
    spec.c = rng.normal();
    return spec;
}

graph::Graph erdos_renyi(SplitMix64& rng, std::size_t n, double prob) {
    std::vector<graph::Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.uniform() < prob) edges.emplace_back(u, v);
    return graph::Graph(n, std::move(edges));
}

graph::Graph random_tree(SplitMix64& rng, std::size_t n) {
    std::vector<graph::Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<std::size_t>(rng.below(v)), v);
    return graph::Graph(n, std::move(edges));
}

}  // namespace spectral_perturb::random
