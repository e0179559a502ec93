#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectral_perturb/graph.hpp"
#include "spectral_perturb/linalg.hpp"

namespace spectral_perturb::pinning {

/// Network of coupled oscillators with feedback on the pinned nodes.
/// The matrices Q and B enter only through ||Q|| and lambda_min(QB + B^t Q^t).
struct PinningProblem {
    graph::Graph graph;
    std::vector<std::size_t> pinned;
    double sigma = 1.0;    // coupling strength
    double kappa = 0.0;    // feedback gain
    double f_bound = 0.0;  // sup ||F||
    double q_norm = 1.0;   // ||Q||
    double qb_min = 0.0;   // lambda_min(QB + B^t Q^t)

    void validate() const;
    double pinned_degree_sum() const;
    /// 2 ||F|| ||Q|| / lambda_min(QB + B^t Q^t); +inf when qb_min = 0 and f_bound > 0.
    double required_level() const;
};

struct QbScalars {
    double q_norm;
    double qb_min;
};

/// ||Q|| and lambda_min(QB + B^t Q^t) from full matrices. Throws InputError
/// when QB + B^t Q^t has an eigenvalue below -1e-10.
QbScalars scalars_from_matrices(const Matrix& q, const Matrix& b);

/// Smallest eigenvalue above 1e-9 (1 + lambda_1); nullopt for the zero matrix.
std::optional<double> smallest_positive_eigenvalue(const SymmetricMatrix& m);

/// sigma L + kappa P
SymmetricMatrix pinned_matrix(const PinningProblem& p);

/// lambda_min>0(L) of the problem's graph; nullopt when the graph has no edges.
std::optional<double> laplacian_smallest_positive(const PinningProblem& p);

struct Controllability {
    bool controllable;
    double margin;      // lambda_min(sigma L + kappa P) qb_min / 2 - f_bound q_norm
    double lambda_min;  // smallest eigenvalue of sigma L + kappa P
};

Controllability controllability_condition(const PinningProblem& p);

/// sigma lmin>0(L) - sum deg_i / (kappa - sigma lmin>0(L)), the
/// iterative bound. Unavailable unless kappa > sigma lmin>0(L).
///
/// This expression is NOT a valid lower bound on lmin>0(sigma L + kappa P) in
/// general: each iteration step borders the current Gram matrix with
/// a = sqrt(sigma kappa) I^t e_i, whose squared norm is sigma kappa deg_i, not
/// deg_i. For C4 pinned at one node with kappa = 4 it returns 1 while the exact
/// value is 0.396. See weighted_pinning_lower_bound for the corrected form.
std::optional<double> iterative_pinning_lower_bound(const PinningProblem& p);

/// sigma lmin>0(L) - sigma kappa sum deg_i / (kappa - sigma lmin>0(L)): the same
/// iteration with the correct border norm. Always a valid lower bound.
std::optional<double> weighted_pinning_lower_bound(const PinningProblem& p);

struct KappaThreshold {
    std::optional<double> value;  // absent when infeasible
    double margin;                // slack of the feasibility condition (< 0 when violated)
    std::string reason;
};

/// Smallest gain making the iterative bound reach required_level():
/// sum deg_i / (sigma lmin>0(L) - level) + sigma lmin>0(L). Feasible only when
/// f_bound < sigma lmin>0(L) qb_min / (2 q_norm) and qb_min > 0.
KappaThreshold kappa_threshold(const PinningProblem& p);

/// Smallest gain making weighted_pinning_lower_bound reach required_level().
/// Infeasible when sigma lmin>0(L) - level - sigma sum deg_i <= 0, since the
/// weighted bound tends to sigma (lmin>0(L) - sum deg_i) as kappa grows.
KappaThreshold weighted_kappa_threshold(const PinningProblem& p);

/// Exact lmin>0(sigma L + kappa P).
double exact_pinned_smallest_positive(const PinningProblem& p);

struct PinSetChoice {
    std::vector<std::size_t> pinned;
    double lambda_min;
};

/// Exhaustive search over pin sets of size r maximizing lambda_min(sigma L + kappa P).
/// Requires N <= 12.
PinSetChoice best_pin_set(const PinningProblem& p, std::size_t r);

}  // namespace spectral_perturb::pinning
