#include "spectral_perturb/cs.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "spectral_perturb/rng.hpp"

namespace spectral_perturb::cs {

DesignMatrix::DesignMatrix(Matrix x, bool normalize) : x_(std::move(x)), normalized_(normalize) {
    require_finite(x_.data(), "design matrix");
    if (!normalize) return;
    for (std::size_t j = 0; j < x_.cols(); ++j) {
        const double nrm = norm2(x_.column(j));
        if (nrm == 0.0) throw InputError("design matrix: cannot normalize a zero column");
        for (std::size_t i = 0; i < x_.rows(); ++i) x_(i, j) /= nrm;
        const double after = norm2(x_.column(j));
        if (std::abs(after - 1.0) > 1e-10) throw InputError("design matrix: column normalization failed");
    }
}

DesignMatrix generate_design(Ensemble kind, std::size_t n, std::size_t p, std::uint64_t seed) {
    if (n == 0 || p == 0) throw InputError("generate_design: n and p must be positive");
    SplitMix64 rng(seed);
    Matrix x(n, p);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < n; ++i) x(i, j) = kind == Ensemble::gaussian ? rng.normal() : rng.sign();
    return DesignMatrix(std::move(x), true);
}

double coherence(const DesignMatrix& dm) {
    if (dm.p() < 2) throw InputError("coherence needs at least two columns");
    const Matrix& x = dm.x();
    double mu = 0.0;
    for (std::size_t j = 0; j < dm.p(); ++j)
        for (std::size_t k = j + 1; k < dm.p(); ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < dm.n(); ++i) s += x(i, j) * x(i, k);
            mu = std::max(mu, std::abs(s));
        }
    return mu;
}

double spectral_norm(const Matrix& x) {
    if (x.cols() == 0) return 0.0;
    return std::sqrt(std::max(0.0, jacobi_eigen(gram(x)).largest()));
}

std::size_t max_subset_size(const DesignMatrix& dm, double c_const) {
    if (dm.p() < 3) throw InputError("max_subset_size needs p >= 3");
    if (!(c_const > 0.0)) throw InputError("max_subset_size needs C > 0");
    const double nrm = spectral_norm(dm.x());
    const double p = static_cast<double>(dm.p());
    const double v = p / std::log(p) * c_const / (nrm * nrm);
    return v > 0.0 ? static_cast<std::size_t>(std::floor(v)) : 0;
}

double gram_deviation(const DesignMatrix& dm, std::span<const std::size_t> t_set) {
    if (t_set.empty()) throw InputError("gram_deviation: empty column set");
    const SymmetricMatrix g = gram(dm.x().select_columns(t_set));
    return operator_norm(g - SymmetricMatrix::identity(g.dim()));
}

bool AppendColumnReport::holds(double tol) const {
    return weyl.holds(tol) && lili.holds(tol) && (!mathias || mathias->holds(tol));
}

AppendColumnReport append_column_bounds(const DesignMatrix& dm, std::span<const std::size_t> t_set,
                                        std::size_t j) {
    if (j >= dm.p()) throw InputError("append_column_bounds: column index out of range");
    if (std::find(t_set.begin(), t_set.end(), j) != t_set.end())
        throw InputError("append_column_bounds: appended column already in T");
    if (t_set.empty()) throw InputError("append_column_bounds: empty column set");

    const Matrix xt = dm.x().select_columns(t_set);
    const Vector xj = dm.x().column(j);
    BorderedSpec spec{gram(xt), xt.transpose() * std::span<const double>(xj), dot(xj, xj)};

    std::vector<std::size_t> all(t_set.begin(), t_set.end());
    all.push_back(j);
    const double exact = jacobi_eigen(gram(dm.x().select_columns(all))).largest();

    const Spectrum ms = jacobi_eigen(spec.m);
    const auto in = bounds::LiLiInputs::from_spec(spec, ms);

    AppendColumnReport out;
    out.weyl.method = "weyl_arrowhead";
    out.weyl.upper = bounds::weyl_arrowhead(in.lambda1, in.c, in.a_norm);
    out.weyl.with_exact(exact);
    if (auto m = bounds::mathias_arrowhead(in.lambda1, in.c, in.a_norm)) {
        bounds::BoundReport r;
        r.method = "mathias_arrowhead";
        r.upper = *m;
        out.mathias = r.with_exact(exact);
    }
    out.lili = bounds::lili_two_sided(in).with_exact(exact);
    return out;
}

unsigned threads_from_env() {
    unsigned n = 0;
    if (const char* env = std::getenv("SPECTRAL_PERTURB_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (n == 0) n = std::max(1U, std::thread::hardware_concurrency());
    return n;
}

namespace {

struct TrialOutcome {
    double cross_sq = 0.0;
    bool ric_ok = false;
    bool bounds_ok = true;
};

TrialOutcome run_trial(const DesignMatrix& dm, const SubsetExperiment& exp, std::size_t k) {
    SplitMix64 rng = SplitMix64::substream(exp.seed, k);
    const auto picked = partial_shuffle(rng, dm.p(), exp.s + 1);
    const std::span<const std::size_t> t_set(picked.data(), exp.s);
    const std::size_t j = picked.back();

    const Matrix xt = dm.x().select_columns(t_set);
    const Vector a = xt.transpose() * std::span<const double>(dm.x().column(j));

    TrialOutcome o;
    o.cross_sq = dot(a, a);
    o.ric_ok = gram_deviation(dm, t_set) <= exp.rho;
    const auto rep = append_column_bounds(dm, t_set, j);
    o.bounds_ok = rep.holds(1e-9 * (1.0 + std::abs(*rep.lili.exact)));
    return o;
}

}  // namespace

TailReport cross_gram_tail(const DesignMatrix& dm, const SubsetExperiment& exp, unsigned threads) {
    if (!dm.normalized()) throw InputError("cross_gram_tail: design matrix must be column-normalized");
    if (exp.s < 1 || exp.s + 1 > dm.p()) throw InputError("cross_gram_tail: need 1 <= s <= p - 1");
    if (dm.p() < 3) throw InputError("cross_gram_tail: need p >= 3");

    TailReport rep;
    rep.n = dm.n();
    rep.p = dm.p();
    rep.s = exp.s;
    rep.trials = exp.trials;
    rep.seed = exp.seed;
    rep.t = exp.t;
    rep.rho = exp.rho;
    rep.c_const = exp.c_const;

    const double p = static_cast<double>(dm.p());
    const double logp = std::log(p);
    const double mu = coherence(dm);
    const double xnorm = spectral_norm(dm.x());
    rep.coherence = mu;
    rep.spectral_norm_sq = xnorm * xnorm;
    rep.max_subset_size = exp.c_const > 0.0 ? max_subset_size(dm, exp.c_const) : 0;
    rep.threshold_cp36 = 1.0 / (4.0 * logp);
    rep.success_prob_cp36 = mu == 0.0 ? 1.0 : 1.0 - 2.0 * std::exp(-3.0 / (64.0 * mu * mu * logp));
    const double center = static_cast<double>(exp.s) / p * rep.spectral_norm_sq;
    rep.threshold_tail = center + exp.t;
    // the source display has a positive exponent, which cannot bound a tail
    rep.tail_bound = mu == 0.0 ? 0.0 : 2.0 * std::exp(-exp.t * exp.t / (2.0 * mu * mu * (center + exp.t / 3.0)));

    std::vector<TrialOutcome> outcomes(exp.trials);
    const unsigned workers = std::max(1U, std::min<unsigned>(threads == 0 ? threads_from_env() : threads,
                                                             static_cast<unsigned>(std::max<std::size_t>(1, exp.trials))));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t k = next++; k < exp.trials; k = next++) {
            try {
                outcomes[k] = run_trial(dm, exp, k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    // reduce in trial order so the report is independent of scheduling
    std::size_t cp36 = 0, tail = 0, ric = 0;
    double sum = 0.0;
    for (const auto& o : outcomes) {
        cp36 += o.cross_sq <= rep.threshold_cp36;
        tail += o.cross_sq >= rep.threshold_tail;
        ric += o.ric_ok;
        rep.bound_violations += !o.bounds_ok;
        sum += o.cross_sq;
    }
    if (exp.trials > 0) {
        const double n = static_cast<double>(exp.trials);
        rep.freq_cp36 = static_cast<double>(cp36) / n;
        rep.freq_tail = static_cast<double>(tail) / n;
        rep.freq_ric = static_cast<double>(ric) / n;
        rep.mean_cross_gram_sq = sum / n;
    }
    return rep;
}

}  // namespace spectral_perturb::cs
