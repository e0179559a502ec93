#include "spectral_perturb/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "spectral_perturb/secular.hpp"

namespace spectral_perturb::bounds {

BoundReport& BoundReport::with_exact(double value) {
    exact = value;
    slack_lower = lower ? std::optional<double>(value - *lower) : std::nullopt;
    slack_upper = upper ? std::optional<double>(*upper - value) : std::nullopt;
    return *this;
}

bool BoundReport::holds(double tol) const {
    if (!exact) return true;
    if (lower && *lower > *exact + tol) return false;
    if (upper && *upper < *exact - tol) return false;
    return true;
}

double quadratic_correction(double eta, double numerator_sq) {
    if (numerator_sq == 0.0) return 0.0;
    return 2.0 * numerator_sq / (eta + std::sqrt(eta * eta + 4.0 * numerator_sq));
}

void LiLiInputs::validate() const {
    if (!(a_norm >= 0.0) || !std::isfinite(a_norm)) throw InputError("||a|| must be finite and >= 0");
    if (!std::isfinite(lambda1) || !std::isfinite(c) || !std::isfinite(a_dot_v1))
        throw InputError("Li-Li inputs must be finite");
    if (std::abs(a_dot_v1) > a_norm + 1e-12 * (1.0 + a_norm))
        throw InputError("|<a, V1>| exceeds ||a||");
}

LiLiInputs LiLiInputs::from_spec(const BorderedSpec& spec) {
    spec.validate();
    return from_spec(spec, jacobi_eigen(spec.m));
}

LiLiInputs LiLiInputs::from_spec(const BorderedSpec& spec, const Spectrum& s) {
    if (spec.dim() == 0) throw InputError("Li-Li inputs need dim(M) >= 1");
    LiLiInputs in;
    in.lambda1 = s.largest();
    in.c = spec.c;
    in.a_norm = norm2(spec.a);
    in.a_dot_v1 = std::sqrt(projection_norm_sq(s, spec.a, 0, leading_multiplicity(s)));
    return in;
}

BoundReport lili_two_sided(const LiLiInputs& in) {
    in.validate();
    const double eta = std::abs(in.c - in.lambda1);
    const double base = std::max(in.c, in.lambda1);
    BoundReport r;
    r.method = "lili_two_sided";
    r.lower = base + quadratic_correction(eta, in.a_dot_v1 * in.a_dot_v1);
    r.upper = base + quadratic_correction(eta, in.a_norm * in.a_norm);
    return r;
}

double weyl_arrowhead(double lambda1, double c, double a_norm) {
    return std::max(c, lambda1) + a_norm;
}

namespace {
bool separated(double x, double y) { return std::abs(x - y) > 1e-12 * (1.0 + std::abs(x) + std::abs(y)); }
}  // namespace

std::optional<double> mathias_arrowhead(double lambda1, double c, double a_norm) {
    if (!separated(lambda1, c)) return std::nullopt;
    return std::max(c, lambda1) + a_norm * a_norm / std::abs(lambda1 - c);
}

double weyl_rank_one(double lambda1_m, double x_norm_sq) {
    if (x_norm_sq < 0.0) throw InputError("||x||^2 must be >= 0");
    return lambda1_m + x_norm_sq;
}

double lili_literature_form(double lambda1, double c, double a_norm) {
    return quadratic_correction(std::abs(c - lambda1), a_norm * a_norm);
}

double smallest_nonzero_lower(double lambda_r, double c, double a_norm, std::size_t r) {
    if (!(lambda_r > 0.0)) throw InputError("smallest nonzero eigenvalue must be > 0");
    if (r == 0) throw InputError("rank must be >= 1");
    if (a_norm < 0.0) throw InputError("||a|| must be >= 0");
    return std::min(c, lambda_r) - quadratic_correction(std::abs(c - lambda_r), a_norm * a_norm);
}

SmallestNonzeroCorollaries smallest_nonzero_corollaries(double lambda_r, double c, double a_norm) {
    if (!(lambda_r > 0.0)) throw InputError("smallest nonzero eigenvalue must be > 0");
    const double base = std::min(c, lambda_r);
    SmallestNonzeroCorollaries out{base - a_norm, std::nullopt};
    if (separated(c, lambda_r)) out.mathias = base - a_norm * a_norm / std::abs(c - lambda_r);
    return out;
}

OpNormBounds opnorm_bounds(double m_norm, double c, double a_norm, double lambda1_m) {
    if (!(m_norm > 0.0)) throw InputError("opnorm_bounds: ||M|| must be > 0");
    OpNormBounds out{};
    out.b1 = std::max(c, m_norm) + a_norm;
    if (c <= lambda1_m && m_norm - c > 0.0) out.b2 = m_norm + a_norm * a_norm / (m_norm - c);
    out.b3 = m_norm + std::abs(c) / 2.0 + (a_norm * a_norm + c * c / 8.0) / m_norm;
    return out;
}

void IpsenNadlerInputs::validate() const {
    const double tol = 1e-12 * (1.0 + x_norm_sq);
    if (lambda1 < lambda2) throw InputError("Ipsen-Nadler: lambda1 < lambda2");
    if (proj2_sq < -tol || proj2_sq > proj12_sq + tol || proj12_sq > x_norm_sq + tol)
        throw InputError("Ipsen-Nadler: inconsistent projection norms");
    if (proj_rest_sq < -tol || proj_rest_sq > x_norm_sq + tol)
        throw InputError("Ipsen-Nadler: inconsistent projection norms");
}

IpsenNadlerInputs IpsenNadlerInputs::from(const SymmetricMatrix& m, std::span<const double> x) {
    return from(jacobi_eigen(m), x);
}

IpsenNadlerInputs IpsenNadlerInputs::from(const Spectrum& s, std::span<const double> x) {
    if (s.size() < 2) throw InputError("Ipsen-Nadler needs dimension >= 2");
    IpsenNadlerInputs in;
    in.lambda1 = s.eigenvalues[0];
    in.lambda2 = s.eigenvalues[1];
    in.x_norm_sq = dot(x, x);
    in.proj2_sq = projection_norm_sq(s, x, 1, 2);
    in.proj12_sq = projection_norm_sq(s, x, 0, 1) + in.proj2_sq;
    in.proj_rest_sq = projection_norm_sq(s, x, 1, s.size());
    return in;
}

BoundReport ipsen_nadler(const IpsenNadlerInputs& in) {
    in.validate();
    const double gap = in.lambda1 - in.lambda2;
    const double disc_min = (gap + in.proj12_sq) * (gap + in.proj12_sq) - 4.0 * gap * in.proj2_sq;
    const double disc_max = (gap + in.x_norm_sq) * (gap + in.x_norm_sq) - 4.0 * gap * in.proj_rest_sq;
    const double delta_min = 0.5 * (in.proj12_sq - gap + std::sqrt(std::max(0.0, disc_min)));
    const double delta_max = 0.5 * (in.x_norm_sq - gap + std::sqrt(std::max(0.0, disc_max)));
    BoundReport r;
    r.method = "ipsen_nadler";
    r.lower = in.lambda1 + delta_min;
    r.upper = in.lambda1 + delta_max;
    return r;
}

SpecAnalysis analyze_spec(const BorderedSpec& spec) {
    spec.validate();
    if (spec.dim() == 0) throw InputError("analyze_spec: dim(M) must be >= 1");
    const Spectrum ms = jacobi_eigen(spec.m);
    const Spectrum as = jacobi_eigen(assemble_bordered(spec));
    const auto problem = secular::SecularProblem::from_arrowhead(to_arrowhead(spec, ms));

    SpecAnalysis out{};
    out.lambda_max_secular = secular::largest_eigenvalue(problem);
    out.lambda_min_secular = secular::smallest_eigenvalue(problem);
    out.lambda_max_oracle = as.largest();
    out.lambda_min_oracle = as.smallest();
    out.norm_oracle = std::max(std::abs(as.largest()), std::abs(as.smallest()));

    const LiLiInputs in = LiLiInputs::from_spec(spec, ms);
    const double lmax = out.lambda_max_secular;
    const double base = std::max(in.c, in.lambda1);

    out.reports.push_back(lili_two_sided(in).with_exact(lmax));

    BoundReport lit;
    lit.method = "lili_literature_form";
    const double radius = lili_literature_form(in.lambda1, in.c, in.a_norm);
    lit.lower = base - radius;
    lit.upper = base + radius;
    out.reports.push_back(lit.with_exact(lmax));

    BoundReport weyl;
    weyl.method = "weyl_arrowhead";
    weyl.upper = weyl_arrowhead(in.lambda1, in.c, in.a_norm);
    out.reports.push_back(weyl.with_exact(lmax));

    if (auto m = mathias_arrowhead(in.lambda1, in.c, in.a_norm)) {
        BoundReport mat;
        mat.method = "mathias_arrowhead";
        mat.upper = *m;
        out.reports.push_back(mat.with_exact(lmax));
    }

    // smallest-nonzero family, only for positive semidefinite M
    const double zero_tol = 1e-9 * (1.0 + std::abs(ms.largest()));
    if (ms.smallest() >= -zero_tol && ms.largest() > zero_tol) {
        std::size_t r = 0;
        while (r < ms.size() && ms.eigenvalues[r] > zero_tol) ++r;
        const double lambda_r = ms.eigenvalues[r - 1];
        const double exact = as.eigenvalues[r];

        BoundReport snz;
        snz.method = "smallest_nonzero";
        snz.lower = smallest_nonzero_lower(lambda_r, in.c, in.a_norm, r);
        out.reports.push_back(snz.with_exact(exact));

        const auto cor = smallest_nonzero_corollaries(lambda_r, in.c, in.a_norm);
        BoundReport sw;
        sw.method = "smallest_nonzero_weyl";
        sw.lower = cor.weyl;
        out.reports.push_back(sw.with_exact(exact));
        if (cor.mathias) {
            BoundReport sm;
            sm.method = "smallest_nonzero_mathias";
            sm.lower = *cor.mathias;
            out.reports.push_back(sm.with_exact(exact));
        }
    }

    const double m_norm = std::max(std::abs(ms.largest()), std::abs(ms.smallest()));
    if (m_norm > 0.0) {
        const auto ob = opnorm_bounds(m_norm, in.c, in.a_norm, ms.largest());
        BoundReport b1;
        b1.method = "opnorm_b1";
        b1.upper = ob.b1;
        out.reports.push_back(b1.with_exact(out.norm_oracle));
        if (ob.b2) {
            BoundReport b2;
            b2.method = "opnorm_b2";
            b2.upper = *ob.b2;
            out.reports.push_back(b2.with_exact(out.norm_oracle));
        }
        BoundReport b3;
        b3.method = "opnorm_b3";
        b3.upper = ob.b3;
        out.reports.push_back(b3.with_exact(out.norm_oracle));
    }
    return out;
}

std::vector<BoundReport> analyze_rank_one(const SymmetricMatrix& m, std::span<const double> x) {
    if (x.size() != m.dim()) throw InputError("analyze_rank_one: dimension mismatch");
    const Spectrum ms = jacobi_eigen(m);
    const double exact = jacobi_eigen(rank_one_update(m, x)).largest();

    std::vector<BoundReport> out;
    BoundReport weyl;
    weyl.method = "weyl_rank_one";
    weyl.upper = weyl_rank_one(ms.largest(), dot(x, x));
    out.push_back(weyl.with_exact(exact));
    if (ms.size() >= 2) out.push_back(ipsen_nadler(IpsenNadlerInputs::from(ms, x)).with_exact(exact));
    return out;
}

}  // namespace spectral_perturb::bounds
