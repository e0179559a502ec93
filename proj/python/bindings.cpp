#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spectral_perturb/bounds.hpp"
#include "spectral_perturb/cs.hpp"
#include "spectral_perturb/graph.hpp"
#include "spectral_perturb/pinning.hpp"
#include "spectral_perturb/report.hpp"
#include "spectral_perturb/secular.hpp"
#include "spectral_perturb/verify.hpp"

namespace py = pybind11;
namespace sp = spectral_perturb;

namespace {

using Rows = std::vector<std::vector<double>>;

sp::SymmetricMatrix symmetric(const Rows& rows) { return sp::SymmetricMatrix::from_matrix(sp::Matrix::from_rows(rows)); }

sp::BorderedSpec spec(const Rows& m, const sp::Vector& a, double c) {
    sp::BorderedSpec s{symmetric(m), a, c};
    s.validate();
    return s;
}

sp::graph::Graph make_graph(std::size_t n, const std::vector<sp::graph::Edge>& edges) { return {n, edges}; }

sp::pinning::PinningProblem problem(std::size_t n, const std::vector<sp::graph::Edge>& edges,
                                    std::vector<std::size_t> pinned, double sigma, double kappa, double f_bound,
                                    double q_norm, double qb_min) {
    sp::pinning::PinningProblem p{make_graph(n, edges), std::move(pinned), sigma, kappa, f_bound, q_norm, qb_min};
    p.validate();
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bounds on the extreme eigenvalues of bordered symmetric matrices";

    py::register_exception<sp::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<sp::NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    m.def(
        "jacobi_eigen",
        [](const Rows& a) {
            const auto s = sp::jacobi_eigen(symmetric(a));
            Rows vecs;
            for (std::size_t k = 0; k < s.size(); ++k) vecs.push_back(s.vector(k));
            return py::make_tuple(s.eigenvalues, vecs);
        },
        py::arg("matrix"), "Eigenvalues (descending) and eigenvectors (one list per eigenvalue).");

    m.def(
        "secular_largest",
        [](const sp::Vector& poles, const sp::Vector& weights, double c) {
            return sp::secular::largest_eigenvalue({poles, weights, c});
        },
        py::arg("poles"), py::arg("weights"), py::arg("c"));
    m.def(
        "secular_smallest",
        [](const sp::Vector& poles, const sp::Vector& weights, double c) {
            return sp::secular::smallest_eigenvalue({poles, weights, c});
        },
        py::arg("poles"), py::arg("weights"), py::arg("c"));

    m.def(
        "lili_two_sided",
        [](double lambda1, double c, double a_norm, double a_dot_v1) {
            const auto r = sp::bounds::lili_two_sided({lambda1, c, a_norm, a_dot_v1});
            return py::make_tuple(*r.lower, *r.upper);
        },
        py::arg("lambda1"), py::arg("c"), py::arg("a_norm"), py::arg("a_dot_v1"));
    m.def("weyl_arrowhead", &sp::bounds::weyl_arrowhead, py::arg("lambda1"), py::arg("c"), py::arg("a_norm"));
    m.def("mathias_arrowhead", &sp::bounds::mathias_arrowhead, py::arg("lambda1"), py::arg("c"), py::arg("a_norm"));
    m.def("smallest_nonzero_lower", &sp::bounds::smallest_nonzero_lower, py::arg("lambda_r"), py::arg("c"),
          py::arg("a_norm"), py::arg("r"));
    m.def(
        "opnorm_bounds",
        [](double m_norm, double c, double a_norm, double lambda1_m) {
            const auto b = sp::bounds::opnorm_bounds(m_norm, c, a_norm, lambda1_m);
            return py::make_tuple(b.b1, b.b2, b.b3);
        },
        py::arg("m_norm"), py::arg("c"), py::arg("a_norm"), py::arg("lambda1_m"));

    m.def(
        "analyze_spec_json",
        [](const Rows& mat, const sp::Vector& a, double c) {
            return sp::report::to_json(sp::bounds::analyze_spec(spec(mat, a, c))).dump();
        },
        py::arg("m"), py::arg("a"), py::arg("c"));
    m.def(
        "analyze_rank_one_json",
        [](const Rows& mat, const sp::Vector& x) {
            sp::report::json out = sp::report::json::array();
            for (const auto& r : sp::bounds::analyze_rank_one(symmetric(mat), x)) out.push_back(sp::report::to_json(r));
            return out.dump();
        },
        py::arg("m"), py::arg("x"));

    m.def(
        "algebraic_connectivity",
        [](std::size_t n, const std::vector<sp::graph::Edge>& edges) {
            return sp::graph::algebraic_connectivity(make_graph(n, edges));
        },
        py::arg("n"), py::arg("edges"));
    m.def(
        "connectivity_lower_from_complement",
        [](std::size_t n, const std::vector<sp::graph::Edge>& edges) {
            return sp::graph::connectivity_lower_from_complement(make_graph(n, edges));
        },
        py::arg("n"), py::arg("edges"));
    m.def(
        "edge_deletion_json",
        [](std::size_t n, const std::vector<sp::graph::Edge>& edges, std::size_t u, std::size_t v) {
            return sp::report::to_json(sp::graph::edge_append_bound(make_graph(n, edges), {u, v})).dump();
        },
        py::arg("n"), py::arg("edges"), py::arg("u"), py::arg("v"));

    m.def(
        "pinning_json",
        [](std::size_t n, const std::vector<sp::graph::Edge>& edges, std::vector<std::size_t> pinned, double sigma,
           double kappa, double f_bound, double q_norm, double qb_min) {
            const auto p = problem(n, edges, std::move(pinned), sigma, kappa, f_bound, q_norm, qb_min);
            const auto opt = [](const std::optional<double>& v) {
                return v ? sp::report::json(*v) : sp::report::json(nullptr);
            };
            const auto ctl = sp::pinning::controllability_condition(p);
            return sp::report::json{{"iterative_bound", opt(sp::pinning::iterative_pinning_lower_bound(p))},
                                    {"weighted_bound", opt(sp::pinning::weighted_pinning_lower_bound(p))},
                                    {"exact", sp::pinning::exact_pinned_smallest_positive(p)},
                                    {"controllable", ctl.controllable},
                                    {"margin", ctl.margin},
                                    {"kappa_threshold", opt(sp::pinning::kappa_threshold(p).value)},
                                    {"weighted_kappa_threshold", opt(sp::pinning::weighted_kappa_threshold(p).value)}}
                .dump();
        },
        py::arg("n"), py::arg("edges"), py::arg("pinned"), py::arg("sigma") = 1.0, py::arg("kappa") = 0.0,
        py::arg("f_bound") = 0.0, py::arg("q_norm") = 1.0, py::arg("qb_min") = 0.0);

    m.def(
        "cross_gram_tail_json",
        [](const std::string& ensemble, std::size_t n, std::size_t p, std::size_t s, std::size_t trials,
           std::uint64_t seed, double t, double rho, double c_const, unsigned threads) {
            sp::cs::Ensemble kind;
            if (ensemble == "gaussian") kind = sp::cs::Ensemble::gaussian;
            else if (ensemble == "bernoulli") kind = sp::cs::Ensemble::bernoulli;
            else throw sp::InputError("ensemble must be 'gaussian' or 'bernoulli'");
            const sp::cs::SubsetExperiment exp{s, trials, seed, t, rho, c_const};
            py::gil_scoped_release release;
            return sp::report::to_json(sp::cs::cross_gram_tail(sp::cs::generate_design(kind, n, p, seed), exp, threads))
                .dump();
        },
        py::arg("ensemble"), py::arg("n"), py::arg("p"), py::arg("s") = 4, py::arg("trials") = 1000,
        py::arg("seed") = 42, py::arg("t") = 0.1, py::arg("rho") = 0.25, py::arg("c_const") = 0.125,
        py::arg("threads") = 1);

    m.def(
        "verify_json",
        [](std::uint64_t seed, std::size_t trials, std::size_t dim, bool inject_fault) {
            sp::verify::Options o;
            o.seed = seed;
            o.trials = trials;
            o.dim = dim;
            o.inject_fault = inject_fault;
            py::gil_scoped_release release;
            return sp::verify::to_json(sp::verify::run(o)).dump();
        },
        py::arg("seed") = 1, py::arg("trials") = 100, py::arg("dim") = 6, py::arg("inject_fault") = false);
}
