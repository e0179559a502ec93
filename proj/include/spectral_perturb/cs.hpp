#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spectral_perturb/bounds.hpp"
#include "spectral_perturb/linalg.hpp"

namespace spectral_perturb::cs {

/// n x p design matrix X; when `normalized`, every column has unit l2 norm.
class DesignMatrix {
public:
    DesignMatrix() = default;
    /// Normalizes columns when `normalize` is set; throws InputError on a zero
    /// column or if a column misses unit norm by more than 1e-10 afterwards.
    DesignMatrix(Matrix x, bool normalize);

    const Matrix& x() const noexcept { return x_; }
    bool normalized() const noexcept { return normalized_; }
    std::size_t n() const noexcept { return x_.rows(); }
    std::size_t p() const noexcept { return x_.cols(); }

private:
    Matrix x_;
    bool normalized_ = false;
};

enum class Ensemble { gaussian, bernoulli };

/// i.i.d. N(0,1) or +-1 entries drawn column by column from SplitMix64(seed),
/// then column-normalized.
DesignMatrix generate_design(Ensemble kind, std::size_t n, std::size_t p, std::uint64_t seed);

/// max_{j != k} |X_j^t X_k|. Requires p >= 2.
double coherence(const DesignMatrix& dm);

/// ||X|| (largest singular value).
double spectral_norm(const Matrix& x);

/// floor(p / log p * C / ||X||^2). Requires p >= 3 and C > 0.
std::size_t max_subset_size(const DesignMatrix& dm, double c_const);

/// ||X_T^t X_T - I||
double gram_deviation(const DesignMatrix& dm, std::span<const std::size_t> t_set);

struct AppendColumnReport {
    bounds::BoundReport weyl;
    std::optional<bounds::BoundReport> mathias;
    bounds::BoundReport lili;

    bool holds(double tol) const;
};

/// Bounds on lambda_1 of the Gram of [X_T, X_j] from M = X_T^t X_T,
/// a = X_T^t X_j and c = X_j^t X_j, with the exact value from the oracle.
AppendColumnReport append_column_bounds(const DesignMatrix& dm, std::span<const std::size_t> t_set,
                                        std::size_t j);

struct SubsetExperiment {
    std::size_t s = 4;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    double t = 0.1;        // deviation offset in the cross-Gram tail event
    double rho = 0.25;     // restricted isometry target
    double c_const = 0.125;
};

/// Monte Carlo summary of ||X_T^t X_j||^2 over random (T, j), together with the
/// append-column bound checks and the restricted-isometry frequency.
struct TailReport {
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t s = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double t = 0.0;
    double rho = 0.0;
    double c_const = 0.0;

    double coherence = 0.0;
    double spectral_norm_sq = 0.0;
    std::size_t max_subset_size = 0;

    double threshold_cp36 = 0.0;     // 1 / (4 log p)
    double freq_cp36 = 0.0;          // P(||X_T^t X_j||^2 <= threshold_cp36)
    double success_prob_cp36 = 0.0;  // 1 - 2 exp(-3 / (64 mu^2 log p))

    double threshold_tail = 0.0;     // s/p ||X||^2 + t
    double freq_tail = 0.0;          // P(||X_T^t X_j||^2 >= threshold_tail)
    double tail_bound = 0.0;         // 2 exp(-t^2 / (2 mu^2 (s ||X||^2 / p + t/3)))
    bool tail_exponent_sign_flipped = true;

    double freq_ric = 0.0;           // P(||X_T^t X_T - I|| <= rho)
    double mean_cross_gram_sq = 0.0;
    std::size_t bound_violations = 0;
};

/// Runs `exp.trials` independent trials. Trial k draws s + 1 distinct columns
/// with a partial Fisher-Yates shuffle from SplitMix64::substream(seed, k); the
/// first s form T and the last is j. `threads` = 0 uses hardware concurrency;
/// results do not depend on the thread count.
TailReport cross_gram_tail(const DesignMatrix& dm, const SubsetExperiment& exp, unsigned threads = 1);

/// Thread cap from SPECTRAL_PERTURB_THREADS (0 or unset = hardware concurrency).
unsigned threads_from_env();

}  // namespace spectral_perturb::cs
