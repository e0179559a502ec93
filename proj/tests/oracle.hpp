#pragma once

// Eigenvalue oracle for the tests: Householder tridiagonalization followed by
// Sturm-sequence bisection. Shares no code with the Jacobi solver.

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<double>>;

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;  // off[i] couples i and i+1
};

inline Tridiagonal tridiagonalize(Dense a) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double alpha = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) alpha += a[i][k] * a[i][k];
        alpha = std::sqrt(alpha);
        if (alpha == 0.0) continue;
        if (a[k + 1][k] > 0) alpha = -alpha;
        std::vector<double> v(n, 0.0);
        v[k + 1] = a[k + 1][k] - alpha;
        for (std::size_t i = k + 2; i < n; ++i) v[i] = a[i][k];
        double vn = 0.0;
        for (double x : v) vn += x * x;
        if (vn == 0.0) continue;
        // A <- H A H with H = I - 2 v v^t / (v^t v)
        std::vector<double> p(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p[i] += a[i][j] * v[j];
        for (double& x : p) x *= 2.0 / vn;
        double kk = 0.0;
        for (std::size_t i = 0; i < n; ++i) kk += v[i] * p[i];
        kk /= vn;
        std::vector<double> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = p[i] - kk * v[i];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= v[i] * w[j] + w[i] * v[j];
    }
    Tridiagonal t;
    for (std::size_t i = 0; i < n; ++i) t.diag.push_back(a[i][i]);
    for (std::size_t i = 0; i + 1 < n; ++i) t.off.push_back(a[i + 1][i]);
    return t;
}

// Number of eigenvalues strictly below x.
inline std::size_t count_below(const Tridiagonal& t, double x) {
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < t.diag.size(); ++i) {
        const double b2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
        q = t.diag[i] - x - (i == 0 ? 0.0 : b2 / q);
        if (q == 0.0) q = -1e-300;
        if (q < 0) ++count;
    }
    return count;
}

/// All eigenvalues, descending.
inline std::vector<double> eigenvalues(const Dense& a) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    const Tridiagonal t = tridiagonalize(a);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(t.diag[i]);
        if (i > 0) row += std::abs(t.off[i - 1]);
        if (i + 1 < n) row += std::abs(t.off[i]);
        r = std::max(r, row);
    }
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        // k-th smallest eigenvalue
        double lo = -r - 1.0, hi = r + 1.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + r); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (count_below(t, mid) > k) hi = mid;
            else lo = mid;
        }
        out[n - 1 - k] = 0.5 * (lo + hi);
    }
    return out;
}

inline double largest(const Dense& a) { return eigenvalues(a).front(); }
inline double smallest(const Dense& a) { return eigenvalues(a).back(); }

inline double spectral_norm(const Dense& a) {
    const auto ev = eigenvalues(a);
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

/// [[c, a^t], [a, m]] assembled by hand.
inline Dense bordered(const Dense& m, const std::vector<double>& a, double c) {
    const std::size_t d = m.size();
    Dense out(d + 1, std::vector<double>(d + 1, 0.0));
    out[0][0] = c;
    for (std::size_t i = 0; i < d; ++i) {
        out[0][i + 1] = out[i + 1][0] = a[i];
        for (std::size_t j = 0; j < d; ++j) out[i + 1][j + 1] = m[i][j];
    }
    return out;
}

/// Eigenvalues of [[p, q], [q, r]], descending.
inline std::pair<double, double> eig2(double p, double q, double r) {
    const double mid = 0.5 * (p + r);
    const double rad = std::sqrt(0.25 * (p - r) * (p - r) + q * q);
    return {mid + rad, mid - rad};
}

}  // namespace oracle
