#pragma once

#include "spectral_perturb/graph.hpp"
#include "spectral_perturb/linalg.hpp"
#include "spectral_perturb/rng.hpp"

namespace spectral_perturb::random {

Vector gaussian_vector(SplitMix64& rng, std::size_t n);
Matrix gaussian_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols);

/// (G + G^t) / 2 for G with i.i.d. N(0,1) entries.
SymmetricMatrix gaussian_symmetric(SplitMix64& rng, std::size_t d);

/// M Gaussian symmetric, a and c i.i.d. N(0,1).
BorderedSpec gaussian_spec(SplitMix64& rng, std::size_t d);

/// A = [x X]^t [x X] for Gaussian X (rows x d) and x: M = X^t X, a = X^t x, c = x^t x.
BorderedSpec gram_spec(SplitMix64& rng, std::size_t d, std::size_t rows);

/// M = Y Y^t with Y Gaussian d x r (rank r almost surely); a and c Gaussian.
BorderedSpec low_rank_psd_spec(SplitMix64& rng, std::size_t d, std::size_t r);

/// Erdos-Renyi G(n, prob).
graph::Graph erdos_renyi(SplitMix64& rng, std::size_t n, double prob);

/// Uniform random labelled tree via a random parent for each vertex > 0.
graph::Graph random_tree(SplitMix64& rng, std::size_t n);

}  // namespace spectral_perturb::random
