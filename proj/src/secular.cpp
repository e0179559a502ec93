#include "spectral_perturb/secular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace spectral_perturb::secular {

void SecularProblem::validate() const {
    if (poles.size() != weights.size())
        throw InputError("secular problem: poles and weights differ in length");
    require_finite(poles, "secular poles");
    require_finite(weights, "secular weights");
    if (!std::isfinite(c)) throw InputError("secular problem: c is not finite");
    for (double w : weights)
        if (w < 0.0) throw InputError("secular problem: negative weight");
    for (std::size_t j = 1; j < poles.size(); ++j)
        if (poles[j] > poles[j - 1]) throw InputError("secular problem: poles not descending");
}

SecularProblem SecularProblem::from_arrowhead(const ArrowheadForm& arrow) {
    SecularProblem p;
    p.poles = arrow.poles;
    p.c = arrow.c;
    p.weights.resize(arrow.border.size());
    std::transform(arrow.border.begin(), arrow.border.end(), p.weights.begin(),
                   [](double b) { return b * b; });
    return p;
}

SecularProblem SecularProblem::from_spec(const BorderedSpec& spec) {
    return from_arrowhead(to_arrowhead(spec));
}

double secular_eval(const SecularProblem& p, double lambda) {
    double f = p.c - lambda;
    for (std::size_t j = 0; j < p.poles.size(); ++j) {
        if (p.weights[j] == 0.0) continue;
        const double gap = lambda - p.poles[j];
        if (std::abs(gap) <= 1e-14 * (1.0 + std::abs(p.poles[j])))
            throw std::domain_error("secular_eval: lambda coincides with a pole");
        f += p.weights[j] / gap;
    }
    return f;
}

namespace {

// Live part of the problem after deflation and merging of repeated poles.
struct Reduced {
    Vector poles;
    Vector weights;
    double c = 0.0;
    std::optional<double> deflated_max;  // largest pole whose weight was dropped
};

Reduced reduce(const SecularProblem& p) {
    const double total = std::accumulate(p.weights.begin(), p.weights.end(), 0.0);
    const double cutoff = 1e-14 * total;
    Reduced r;
    r.c = p.c;
    for (std::size_t j = 0; j < p.poles.size(); ++j) {
        if (p.weights[j] <= cutoff) {
            if (!r.deflated_max || p.poles[j] > *r.deflated_max) r.deflated_max = p.poles[j];
            continue;
        }
        if (!r.poles.empty() && r.poles.back() == p.poles[j]) {
            r.weights.back() += p.weights[j];
        } else {
            r.poles.push_back(p.poles[j]);
            r.weights.push_back(p.weights[j]);
        }
    }
    return r;
}

double eval_reduced(const Reduced& r, double x) {
    double f = r.c - x;
    for (std::size_t j = 0; j < r.poles.size(); ++j) f += r.weights[j] / (x - r.poles[j]);
    return f;
}

double slope_reduced(const Reduced& r, double x) {
    double d = -1.0;
    for (std::size_t j = 0; j < r.poles.size(); ++j) {
        const double g = x - r.poles[j];
        d -= r.weights[j] / (g * g);
    }
    return d;
}

}  // namespace

double root_upper_bound(const SecularProblem& p) {
    if (p.poles.empty()) return p.c;
    const double w = std::accumulate(p.weights.begin(), p.weights.end(), 0.0);
    const double l1 = p.poles.front();
    return 0.5 * (p.c + l1) + 0.5 * std::sqrt((p.c - l1) * (p.c - l1) + 4.0 * w);
}

double largest_eigenvalue(const SecularProblem& p) {
    p.validate();
    const Reduced r = reduce(p);
    if (r.poles.empty()) return p.poles.empty() ? p.c : std::max(p.c, p.poles.front());

    const double top = r.poles.front();
    const double w = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
    // f < 0 beyond the root of c - x + w/(x - top), so this brackets from above
    double lo = top;
    double hi = 0.5 * (r.c + top) + 0.5 * std::sqrt((r.c - top) * (r.c - top) + 4.0 * w);
    const double scale = 1.0 + std::abs(top) + std::sqrt(w);

    double x = hi;
    if (hi > lo) {
        while (hi - lo > 1e-13 * scale) {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi) break;
            if (eval_reduced(r, mid) > 0.0) lo = mid;
            else hi = mid;
        }
        // Newton polish, rejected whenever it leaves the bracket
        x = lo + 0.5 * (hi - lo);
        for (int it = 0; it < 8 && x > lo && x < hi; ++it) {
            const double fx = eval_reduced(r, x);
            if (fx == 0.0) break;
            if (fx > 0.0) lo = x;
            else hi = x;
            double next = x - fx / slope_reduced(r, x);
            if (!(next > lo && next < hi)) next = lo + 0.5 * (hi - lo);
            const bool settled = std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * scale;
            x = next;
            if (settled) break;
        }
        if (!(x > top)) x = hi;
    }
    return r.deflated_max ? std::max(x, *r.deflated_max) : x;
}

SecularProblem negate(const SecularProblem& p) {
    SecularProblem q;
    q.c = -p.c;
    q.poles.assign(p.poles.rbegin(), p.poles.rend());
    for (double& v : q.poles) v = -v;
    q.weights.assign(p.weights.rbegin(), p.weights.rend());
    return q;
}

double smallest_eigenvalue(const SecularProblem& p) { return -largest_eigenvalue(negate(p)); }

}  // namespace spectral_perturb::secular
