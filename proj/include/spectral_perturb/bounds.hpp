#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectral_perturb/linalg.hpp"

namespace spectral_perturb::bounds {

/// Named bound on an extreme eigenvalue, optionally paired with the exact value.
/// Absent fields mean "not applicable" or "unavailable", never zero.
struct BoundReport {
    std::string method;
    std::optional<double> lower;
    std::optional<double> upper;
    std::optional<double> exact;
    std::optional<double> slack_lower;  // exact - lower
    std::optional<double> slack_upper;  // upper - exact

    /// Sets `exact` and recomputes the slacks.
    BoundReport& with_exact(double value);

    /// lower <= exact <= upper within `tol`, for whichever sides are present.
    bool holds(double tol) const;
};

/// 2 n / (eta + sqrt(eta^2 + 4 n)), defined as 0 when eta = n = 0.
double quadratic_correction(double eta, double numerator_sq);

struct LiLiInputs {
    double lambda1 = 0.0;
    double c = 0.0;
    double a_norm = 0.0;
    /// <a, V_1>, or the norm of the projection of a onto the leading
    /// eigenspace when lambda1 is repeated.
    double a_dot_v1 = 0.0;

    void validate() const;
    static LiLiInputs from_spec(const BorderedSpec& spec);
    static LiLiInputs from_spec(const BorderedSpec& spec, const Spectrum& m_spectrum);
};

/// max(c, l1) + correction(<a,V1>^2) <= lambda_1(A) <= max(c, l1) + correction(||a||^2).
BoundReport lili_two_sided(const LiLiInputs& in);

/// max(c, l1) + ||a||
double weyl_arrowhead(double lambda1, double c, double a_norm);

/// max(c, l1) + ||a||^2 / |l1 - c|, unavailable when |l1 - c| <= 1e-12 (1 + |l1| + |c|).
std::optional<double> mathias_arrowhead(double lambda1, double c, double a_norm);

/// lambda_1(M) + ||x||^2 bounds lambda_1(M + x x^t).
double weyl_rank_one(double lambda1_m, double x_norm_sq);

/// Deviation radius of the classical two-sided form
/// |lambda_1(A) - max(c, l1)| <= correction(||a||^2).
double lili_literature_form(double lambda1, double c, double a_norm);

/// Lower bound on lambda_{r+1}(A) for positive semidefinite M of rank r, where
/// lambda_r is the smallest nonzero eigenvalue of M.
double smallest_nonzero_lower(double lambda_r, double c, double a_norm, std::size_t r);

struct SmallestNonzeroCorollaries {
    double weyl;
    std::optional<double> mathias;
};

SmallestNonzeroCorollaries smallest_nonzero_corollaries(double lambda_r, double c, double a_norm);

/// Three upper bounds on ||A||:
///   b1 = max(c, ||M||) + ||a||
///   b2 = ||M|| + ||a||^2 / (||M|| - c)    when c <= lambda_1(M) and ||M|| > c
///   b3 = ||M|| + |c|/2 + (||a||^2 + c^2/8) / ||M||
/// b1 and b2 are proven for Gram-type bordered matrices (A and M positive
/// semidefinite, c >= 0); for indefinite M or c < -||M|| they can fail. b3
/// holds for every symmetric M.
struct OpNormBounds {
    double b1;
    std::optional<double> b2;
    double b3;
};

OpNormBounds opnorm_bounds(double m_norm, double c, double a_norm, double lambda1_m);

struct IpsenNadlerInputs {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double x_norm_sq = 0.0;
    double proj12_sq = 0.0;     // ||P_{V1,V2} x||^2
    double proj2_sq = 0.0;      // ||P_{V2} x||^2
    double proj_rest_sq = 0.0;  // ||P_{V2..Vd} x||^2

    void validate() const;
    static IpsenNadlerInputs from(const SymmetricMatrix& m, std::span<const double> x);
    static IpsenNadlerInputs from(const Spectrum& m_spectrum, std::span<const double> x);
};

/// lambda_1(M) + delta_min <= lambda_1(M + x x^t) <= lambda_1(M) + delta_max.
BoundReport ipsen_nadler(const IpsenNadlerInputs& in);

/// Every bound on the extreme eigenvalues and the norm of A = [[c, a^t], [a, M]],
/// with exact values filled in from the secular solver. The smallest-nonzero
/// family is included only when M is positive semidefinite (rank detected at
/// 1e-9 (1 + lambda_1)).
struct SpecAnalysis {
    double lambda_max_secular;
    double lambda_min_secular;
    double lambda_max_oracle;
    double lambda_min_oracle;
    double norm_oracle;
    std::vector<BoundReport> reports;
};

SpecAnalysis analyze_spec(const BorderedSpec& spec);

/// Bounds on lambda_1(M + x x^t): Weyl rank-one and Ipsen-Nadler, with the
/// exact value from the oracle.
std::vector<BoundReport> analyze_rank_one(const SymmetricMatrix& m, std::span<const double> x);

}  // namespace spectral_perturb::bounds
