#pragma once

#include "spectral_perturb/linalg.hpp"

namespace spectral_perturb::secular {

/// f(lambda) = c - lambda + sum_j w_j / (lambda - p_j) with poles p sorted
/// descending and weights w_j = b_j^2 >= 0.
struct SecularProblem {
    Vector poles;
    Vector weights;
    double c = 0.0;

    void validate() const;

    static SecularProblem from_arrowhead(const ArrowheadForm& arrow);
    static SecularProblem from_spec(const BorderedSpec& spec);
};

double secular_eval(const SecularProblem& p, double lambda);

/// Upper end of the root bracket:
/// (c + l1)/2 + sqrt((c - l1)^2 + 4 ||b||^2)/2 for the leading pole l1.
double root_upper_bound(const SecularProblem& p);

/// Largest eigenvalue of the arrowhead matrix described by `p`.
double largest_eigenvalue(const SecularProblem& p);

/// Smallest eigenvalue, via largest_eigenvalue of negate(p).
double smallest_eigenvalue(const SecularProblem& p);

/// poles -> -reversed(poles), weights reversed, c -> -c.
SecularProblem negate(const SecularProblem& p);

}  // namespace spectral_perturb::secular
