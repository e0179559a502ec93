#include "spectral_perturb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "spectral_perturb/bounds.hpp"
#include "spectral_perturb/graph.hpp"
#include "spectral_perturb/io.hpp"
#include "spectral_perturb/pinning.hpp"
#include "spectral_perturb/random_instances.hpp"
#include "spectral_perturb/report.hpp"
#include "spectral_perturb/secular.hpp"

namespace spectral_perturb::verify {

using json = nlohmann::ordered_json;

namespace {

class Checker {
public:
    Checker(Summary& out, const Options& opts) : out_(out), opts_(opts) {}

    void check(const std::string& name, bool ok, std::size_t trial, const std::string& detail,
               const json& instance) {
        auto [it, fresh] = index_.try_emplace(name, out_.tallies.size());
        if (fresh) out_.tallies.push_back({name, 0, 0});
        Tally& t = out_.tallies[it->second];
        ++t.checked;
        if (ok) return;
        ++t.violated;
        if (out_.failures.size() < opts_.max_failures) out_.failures.push_back({name, trial, detail, instance});
    }

    /// lower <= exact <= upper within tol * scale, for a bound report.
    void check_report(const std::string& name, const bounds::BoundReport& r, double scale, std::size_t trial,
                      const json& instance) {
        check(name, r.holds(opts_.tol * scale), trial, report::to_json(r).dump(), instance);
    }

    double tol() const { return opts_.tol; }

private:
    Summary& out_;
    const Options& opts_;
    std::map<std::string, std::size_t> index_;
};

std::string describe(const char* what, double lhs, const char* rel, double rhs) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": " << lhs << ' ' << rel << ' ' << rhs;
    return os.str();
}

// Rebuilds m from its spectrum with lambda_2 raised to lambda_1.
SymmetricMatrix with_repeated_top(const SymmetricMatrix& m) {
    const Spectrum s = jacobi_eigen(m);
    Vector ev = s.eigenvalues;
    if (ev.size() >= 2) ev[1] = ev[0];
    const std::size_t d = m.dim();
    SymmetricMatrix out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            double v = 0.0;
            for (std::size_t k = 0; k < d; ++k) v += s.eigenvectors(i, k) * ev[k] * s.eigenvectors(j, k);
            out.set(i, j, v);
        }
    return out;
}

BorderedSpec gaussian_variant(SplitMix64& rng, std::size_t d, std::size_t k) {
    BorderedSpec spec = random::gaussian_spec(rng, d);
    switch (k % 4) {
        case 1: {  // a orthogonal to the leading eigenvector
            const Vector v1 = jacobi_eigen(spec.m).vector(0);
            const double p = dot(spec.a, v1);
            for (std::size_t i = 0; i < d; ++i) spec.a[i] -= p * v1[i];
            break;
        }
        case 2:  // c ties with lambda_1(M)
            spec.c = jacobi_eigen(spec.m).largest();
            break;
        case 3:
            spec.m = with_repeated_top(spec.m);
            break;
        default:
            break;
    }
    return spec;
}

void check_bordered(Checker& ck, const BorderedSpec& spec, std::size_t trial, bool inject_fault) {
    const json inst = report::to_json(spec);
    const std::size_t d = spec.dim();
    const Spectrum ms = jacobi_eigen(spec.m);
    const Spectrum as = jacobi_eigen(assemble_bordered(spec));
    const ArrowheadForm arrow = to_arrowhead(spec, ms);
    const Spectrum bs = jacobi_eigen(assemble_arrowhead(arrow));
    const double a_sq = dot(spec.a, spec.a);
    const double scale = 1.0 + std::max(std::abs(as.largest()), std::abs(as.smallest())) + a_sq;
    const double tol = ck.tol() * scale;

    double sim = 0.0;
    for (std::size_t i = 0; i <= d; ++i) sim = std::max(sim, std::abs(as.eigenvalues[i] - bs.eigenvalues[i]));
    ck.check("arrowhead_similarity", sim <= tol, trial, describe("max spectrum gap", sim, "<=", tol), inst);

    bool interlaced = true;
    for (std::size_t k = 0; k < d; ++k)
        interlaced = interlaced && as.eigenvalues[k + 1] <= ms.eigenvalues[k] + tol &&
                     ms.eigenvalues[k] <= as.eigenvalues[k] + tol;
    ck.check("cauchy_interlacing", interlaced, trial, "lambda_{k+1}(A) <= lambda_k(M) <= lambda_k(A)", inst);

    const auto problem = secular::SecularProblem::from_arrowhead(arrow);
    const double smax = secular::largest_eigenvalue(problem);
    const double smin = secular::smallest_eigenvalue(problem);
    ck.check("secular_largest", std::abs(smax - as.largest()) <= tol, trial,
             describe("secular vs oracle", smax, "~", as.largest()), inst);
    ck.check("secular_smallest", std::abs(smin - as.smallest()) <= tol, trial,
             describe("secular vs oracle", smin, "~", as.smallest()), inst);
    const double star = secular::root_upper_bound(problem);
    ck.check("secular_bracket", smax <= star + tol && smax >= std::max(spec.c, ms.largest()) - tol, trial,
             describe("root", smax, "<=", star), inst);

    const auto in = bounds::LiLiInputs::from_spec(spec, ms);
    const double base = std::max(in.c, in.lambda1);
    bounds::BoundReport lili = bounds::lili_two_sided(in);
    if (inject_fault) lili.upper = base + 0.5 * (*lili.upper - base);
    lili.with_exact(as.largest());
    ck.check_report("lili_two_sided", lili, scale, trial, inst);
    ck.check("lili_lower_above_interlacing", *lili.lower >= base - tol, trial,
             describe("lower", *lili.lower, ">=", base), inst);

    const double weyl = bounds::weyl_arrowhead(in.lambda1, in.c, in.a_norm);
    ck.check("lili_tighter_than_weyl", *lili.upper <= weyl + tol, trial,
             describe("lili upper", *lili.upper, "<=", weyl), inst);
    if (const auto mat = bounds::mathias_arrowhead(in.lambda1, in.c, in.a_norm))
        ck.check("lili_tighter_than_mathias", *lili.upper <= *mat + tol, trial,
                 describe("lili upper", *lili.upper, "<=", *mat), inst);

    const double radius = bounds::lili_literature_form(in.lambda1, in.c, in.a_norm);
    ck.check("literature_radius", std::abs(as.largest() - base) <= radius + tol, trial,
             describe("|lambda_1(A) - base|", std::abs(as.largest() - base), "<=", radius), inst);

    // shifting c and M by t shifts both Li-Li bounds by t
    const double t = 3.5;
    bounds::LiLiInputs shifted = in;
    shifted.c += t;
    shifted.lambda1 += t;
    const auto sr = bounds::lili_two_sided(shifted);
    const auto r0 = bounds::lili_two_sided(in);
    const double dl = std::abs(*sr.lower - *r0.lower - t), du = std::abs(*sr.upper - *r0.upper - t);
    ck.check("shift_equivariance", std::max(dl, du) <= tol, trial,
             describe("shift error", std::max(dl, du), "<=", tol), inst);

    for (const auto& r : bounds::analyze_rank_one(spec.m, spec.a))
        ck.check_report(r.method, r, scale, trial, inst);

    const double m_norm = std::max(std::abs(ms.largest()), std::abs(ms.smallest()));
    if (m_norm > 0.0) {
        const auto ob = bounds::opnorm_bounds(m_norm, spec.c, in.a_norm, ms.largest());
        const double nrm = std::max(std::abs(as.largest()), std::abs(as.smallest()));
        ck.check("opnorm_b3", nrm <= ob.b3 + tol, trial, describe("||A||", nrm, "<=", ob.b3), inst);
    }
}

void check_gram(Checker& ck, const BorderedSpec& spec, std::size_t trial) {
    const json inst = report::to_json(spec);
    const auto analysis = bounds::analyze_spec(spec);
    const double scale = 1.0 + analysis.norm_oracle;
    for (const auto& r : analysis.reports)
        if (r.method.rfind("opnorm_", 0) == 0) ck.check_report("gram_" + r.method, r, scale, trial, inst);
}

void check_low_rank(Checker& ck, const BorderedSpec& spec, std::size_t trial) {
    const json inst = report::to_json(spec);
    const auto analysis = bounds::analyze_spec(spec);
    const double scale = 1.0 + analysis.norm_oracle + dot(spec.a, spec.a);
    bool seen = false;
    for (const auto& r : analysis.reports)
        if (r.method.rfind("smallest_nonzero", 0) == 0) {
            ck.check_report(r.method, r, scale, trial, inst);
            seen = true;
        }
    ck.check("psd_rank_detected", seen, trial, "positive semidefinite M not recognised", inst);
}

json graph_json(const graph::Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

void check_graph(Checker& ck, SplitMix64& rng, std::size_t n, std::size_t trial) {
    const graph::Graph g = random::erdos_renyi(rng, n, 0.2 + 0.6 * rng.uniform());
    const json inst = graph_json(g);
    const double tol = ck.tol() * (1.0 + 2.0 * static_cast<double>(n));

    const Matrix inc = graph::incidence(g);
    const SymmetricMatrix lap = graph::laplacian(g);
    double diff = 0.0;
    const Matrix prod = inc * inc.transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) diff = std::max(diff, std::abs(prod(i, j) - lap(i, j)));
    ck.check("laplacian_factorization", diff == 0.0, trial, describe("max |II^t - L|", diff, "==", 0.0), inst);

    const Spectrum ls = jacobi_eigen(lap);
    const auto zeros = static_cast<std::size_t>(
        std::count_if(ls.eigenvalues.begin(), ls.eigenvalues.end(), [&](double x) { return std::abs(x) <= tol; }));
    ck.check("laplacian_kernel_dimension", zeros == g.component_count(), trial,
             describe("zero eigenvalues", static_cast<double>(zeros), "==",
                      static_cast<double>(g.component_count())),
             inst);

    const double conn = graph::algebraic_connectivity(g);
    const double lower = graph::connectivity_lower_from_complement(g);
    ck.check("complement_connectivity", lower <= conn + tol, trial, describe("bound", lower, "<=", conn), inst);

    if (g.edge_count() > 0) {
        const graph::Edge e = g.edges()[rng.below(g.edge_count())];
        const auto r = graph::edge_append_bound(g, e);
        json with_edge = inst;
        with_edge["deleted"] = {e.first, e.second};
        ck.check_report("edge_deletion_connectivity", r, 1.0 + 2.0 * static_cast<double>(n), trial, with_edge);
    }
}

void check_pinning(Checker& ck, SplitMix64& rng, std::size_t n, std::size_t trial) {
    pinning::PinningProblem p;
    const graph::Graph tree = random::random_tree(rng, n);
    const graph::Graph extra = random::erdos_renyi(rng, n, 0.3);
    std::vector<graph::Edge> edges = tree.edges();
    for (const auto& e : extra.edges())
        if (!tree.has_edge(e.first, e.second)) edges.push_back(e);
    p.graph = graph::Graph(n, std::move(edges));
    p.pinned = partial_shuffle(rng, n, 1 + rng.below(n));
    std::sort(p.pinned.begin(), p.pinned.end());
    p.sigma = 0.5 + 1.5 * rng.uniform();
    p.kappa = 20.0 * rng.uniform();
    p.qb_min = 1.0;
    p.validate();

    json inst = {{"graph", graph_json(p.graph)}, {"pinned", p.pinned}, {"sigma", p.sigma}, {"kappa", p.kappa}};
    if (const auto w = pinning::weighted_pinning_lower_bound(p)) {
        const double exact = pinning::exact_pinned_smallest_positive(p);
        const double tol = ck.tol() * (1.0 + p.kappa + 2.0 * p.sigma * static_cast<double>(n));
        ck.check("weighted_pinning_bound", *w <= exact + tol, trial, describe("bound", *w, "<=", exact), inst);
    }
}

}  // namespace

std::size_t Summary::total_checks() const {
    std::size_t n = 0;
    for (const auto& t : tallies) n += t.checked;
    return n;
}

std::size_t Summary::total_violations() const {
    std::size_t n = 0;
    for (const auto& t : tallies) n += t.violated;
    return n;
}

BorderedSpec trial_spec(const Options& opts, std::size_t k) {
    if (opts.dim == 0) throw InputError("verify: dim must be >= 1");
    SplitMix64 rng = SplitMix64::substream(opts.seed, k);
    return gaussian_variant(rng, opts.dim, k);
}

Summary run(const Options& opts) {
    if (opts.dim < 2) throw InputError("verify: dim must be >= 2");
    if (!(opts.tol > 0.0)) throw InputError("verify: tol must be positive");
    Summary out;
    out.trials = opts.trials;
    Checker ck(out, opts);
    const std::size_t d = opts.dim;
    for (std::size_t k = 0; k < opts.trials; ++k) {
        SplitMix64 rng = SplitMix64::substream(opts.seed, k);
        check_bordered(ck, gaussian_variant(rng, d, k), k, opts.inject_fault);
        check_gram(ck, random::gram_spec(rng, d, d + 2), k);
        check_low_rank(ck, random::low_rank_psd_spec(rng, d, 1 + rng.below(d - 1)), k);
        check_graph(ck, rng, 2 + rng.below(std::min<std::size_t>(d, 8)), k);
        check_pinning(ck, rng, 3 + rng.below(std::min<std::size_t>(d, 6)), k);
    }
    return out;
}

json to_json(const Summary& s) {
    json tallies = json::array();
    for (const auto& t : s.tallies)
        tallies.push_back({{"invariant", t.invariant}, {"checked", t.checked}, {"violated", t.violated}});
    json failures = json::array();
    for (const auto& f : s.failures)
        failures.push_back({{"invariant", f.invariant}, {"trial", f.trial}, {"detail", f.detail}, {"instance", f.instance}});
    return {{"trials", s.trials},
            {"checks", s.total_checks()},
            {"violations", s.total_violations()},
            {"invariants", tallies},
            {"failures", failures}};
}

void emit_fixtures(const Options& opts, std::size_t count, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto open = [&](const std::string& name) {
        std::ofstream f(fs::path(dir) / name);
        if (!f) throw InputError("cannot write '" + (fs::path(dir) / name).string() + "'");
        return f;
    };
    for (std::size_t k = 0; k < count; ++k) {
        const BorderedSpec spec = trial_spec(opts, k);
        const std::string stem = "instance_" + std::to_string(k);
        open(stem + ".json") << report::dump(report::to_json(spec));
        {
            auto f = open(stem + "_M.csv");
            io::write_matrix_csv(f, spec.m.as_matrix());
        }
        {
            auto f = open(stem + "_a.csv");
            Matrix col(spec.dim(), 1);
            for (std::size_t i = 0; i < spec.dim(); ++i) col(i, 0) = spec.a[i];
            io::write_matrix_csv(f, col);
        }
        open(stem + "_report.json") << report::dump(report::to_json(bounds::analyze_spec(spec)));
    }
}

}  // namespace spectral_perturb::verify
