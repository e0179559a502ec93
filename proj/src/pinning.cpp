#include "spectral_perturb/pinning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace spectral_perturb::pinning {

void PinningProblem::validate() const {
    std::set<std::size_t> seen;
    for (std::size_t v : pinned) {
        if (v >= graph.n()) throw InputError("pinning: pinned node out of range");
        if (!seen.insert(v).second) throw InputError("pinning: pinned node listed twice");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InputError("pinning: sigma must be > 0");
    if (!std::isfinite(kappa)) throw InputError("pinning: kappa must be finite");
    if (!(f_bound >= 0.0) || !std::isfinite(f_bound)) throw InputError("pinning: f_bound must be >= 0");
    if (!(q_norm > 0.0) || !std::isfinite(q_norm)) throw InputError("pinning: q_norm must be > 0");
    if (!(qb_min >= 0.0) || !std::isfinite(qb_min)) throw InputError("pinning: qb_min must be >= 0");
}

double PinningProblem::pinned_degree_sum() const {
    double s = 0.0;
    for (std::size_t v : pinned) s += static_cast<double>(graph.degree(v));
    return s;
}

double PinningProblem::required_level() const {
    if (f_bound == 0.0) return 0.0;
    if (qb_min == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * f_bound * q_norm / qb_min;
}

QbScalars scalars_from_matrices(const Matrix& q, const Matrix& b) {
    if (q.rows() != q.cols() || b.rows() != b.cols() || q.rows() != b.rows())
        throw InputError("Q and B must be square matrices of the same size");
    const Matrix qb = q * b;
    SymmetricMatrix sym(qb.rows());
    for (std::size_t i = 0; i < qb.rows(); ++i)
        for (std::size_t j = i; j < qb.cols(); ++j) sym.set(i, j, qb(i, j) + qb(j, i));
    double qb_min = jacobi_eigen(sym).smallest();
    if (qb_min < -1e-10) throw InputError("QB + B^t Q^t is not positive semidefinite");
    qb_min = std::max(qb_min, 0.0);
    const double q_norm = std::sqrt(std::max(0.0, jacobi_eigen(gram(q)).largest()));
    return {q_norm, qb_min};
}

std::optional<double> smallest_positive_eigenvalue(const SymmetricMatrix& m) {
    if (m.dim() == 0) return std::nullopt;
    const Spectrum s = jacobi_eigen(m);
    const double tol = 1e-9 * (1.0 + std::abs(s.largest()));
    for (auto it = s.eigenvalues.rbegin(); it != s.eigenvalues.rend(); ++it)
        if (*it > tol) return *it;
    return std::nullopt;
}

SymmetricMatrix pinned_matrix(const PinningProblem& p) {
    SymmetricMatrix m = graph::laplacian(p.graph).scaled(p.sigma);
    for (std::size_t v : p.pinned) m.add(v, v, p.kappa);
    return m;
}

std::optional<double> laplacian_smallest_positive(const PinningProblem& p) {
    return smallest_positive_eigenvalue(graph::laplacian(p.graph));
}

Controllability controllability_condition(const PinningProblem& p) {
    p.validate();
    const double lmin = jacobi_eigen(pinned_matrix(p)).smallest();
    const double margin = 0.5 * lmin * p.qb_min - p.f_bound * p.q_norm;
    return {margin > 0.0, margin, lmin};
}

namespace {

// Shared shape of both iterative bounds: base - weight * S / (kappa - base).
std::optional<double> iterative_bound(const PinningProblem& p, double weight) {
    p.validate();
    const auto l2 = laplacian_smallest_positive(p);
    if (!l2) return std::nullopt;
    const double base = p.sigma * *l2;
    if (p.pinned.empty()) return base;
    if (!(p.kappa > base)) return std::nullopt;
    return base - weight * p.pinned_degree_sum() / (p.kappa - base);
}

}  // namespace

std::optional<double> iterative_pinning_lower_bound(const PinningProblem& p) {
    return iterative_bound(p, 1.0);
}

std::optional<double> weighted_pinning_lower_bound(const PinningProblem& p) {
    return iterative_bound(p, p.sigma * p.kappa);
}

KappaThreshold kappa_threshold(const PinningProblem& p) {
    p.validate();
    if (p.qb_min == 0.0) return {std::nullopt, -1.0, "lambda_min(QB + B^t Q^t) = 0"};
    const auto l2 = laplacian_smallest_positive(p);
    if (!l2) return {std::nullopt, -1.0, "graph has no edges: lambda_min>0(L) undefined"};
    const double base = p.sigma * *l2;
    const double level = p.required_level();
    const double margin = base - level;
    if (!(margin > 0.0))
        return {std::nullopt, margin, "f_bound too large: sigma lambda_min>0(L) <= 2 ||F|| ||Q|| / qb_min"};
    return {p.pinned_degree_sum() / margin + base, margin, ""};
}

KappaThreshold weighted_kappa_threshold(const PinningProblem& p) {
    p.validate();
    if (p.qb_min == 0.0 && p.f_bound > 0.0) return {std::nullopt, -1.0, "lambda_min(QB + B^t Q^t) = 0"};
    const auto l2 = laplacian_smallest_positive(p);
    if (!l2) return {std::nullopt, -1.0, "graph has no edges: lambda_min>0(L) undefined"};
    const double base = p.sigma * *l2;
    const double s = p.pinned_degree_sum();
    const double margin = base - p.required_level() - p.sigma * s;
    if (s == 0.0) {
        const double m0 = base - p.required_level();
        if (!(m0 >= 0.0)) return {std::nullopt, m0, "required level exceeds sigma lambda_min>0(L)"};
        return {base, m0, ""};
    }
    if (!(margin > 0.0))
        return {std::nullopt, margin, "weighted bound saturates below the required level"};
    return {base + p.sigma * s * base / margin, margin, ""};
}

double exact_pinned_smallest_positive(const PinningProblem& p) {
    p.validate();
    const auto v = smallest_positive_eigenvalue(pinned_matrix(p));
    return v.value_or(0.0);
}

PinSetChoice best_pin_set(const PinningProblem& p, std::size_t r) {
    p.validate();
    const std::size_t n = p.graph.n();
    if (n > 12) throw InputError("best_pin_set: exhaustive search limited to N <= 12");
    if (r > n) throw InputError("best_pin_set: r exceeds N");

    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    PinSetChoice best{{}, -std::numeric_limits<double>::infinity()};
    // prev_permutation over a sorted-descending mask visits subsets in lexicographic order
    do {
        PinningProblem q = p;
        q.pinned.clear();
        for (std::size_t v = 0; v < n; ++v)
            if (pick[v]) q.pinned.push_back(v);
        const double l = jacobi_eigen(pinned_matrix(q)).smallest();
        if (l > best.lambda_min) best = {q.pinned, l};
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

}  // namespace spectral_perturb::pinning
