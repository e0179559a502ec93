// spectral-perturb: command-line front end for the bordered-matrix bounds.
//
// Exit codes: 0 success, 1 invariant violation (or a numerical failure),
// 2 input error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectral_perturb/bounds.hpp"
#include "spectral_perturb/cs.hpp"
#include "spectral_perturb/graph.hpp"
#include "spectral_perturb/io.hpp"
#include "spectral_perturb/pinning.hpp"
#include "spectral_perturb/report.hpp"
#include "spectral_perturb/secular.hpp"
#include "spectral_perturb/verify.hpp"

namespace sp = spectral_perturb;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct Global {
    std::string out;
    std::string format = "json";
    double tol = 1e-9;
};

struct Result {
    json doc;    // full JSON document
    json table;  // what --format csv prints: an array of flat objects, or a flat object
    int code = kOk;
};

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string to_csv(const json& table) {
    std::ostringstream os;
    if (table.is_object()) {
        os << "key,value\n";
        for (const auto& [k, v] : table.items()) os << k << ',' << csv_cell(v) << '\n';
        return os.str();
    }
    std::vector<std::string> keys;
    for (const auto& row : table)
        for (const auto& [k, v] : row.items())
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
    os << '\n';
    for (const auto& row : table) {
        for (std::size_t i = 0; i < keys.size(); ++i)
            os << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row.at(keys[i])) : "");
        os << '\n';
    }
    return os.str();
}

void write_output(const Global& g, const Result& r) {
    const std::string text = g.format == "csv" ? to_csv(r.table) : sp::report::dump(r.doc);
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw sp::InputError("cannot write '" + g.out + "'");
    f << text;
}

json reports_json(const std::vector<sp::bounds::BoundReport>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(sp::report::to_json(r));
    return arr;
}

sp::BorderedSpec load_spec(const std::string& m_path, const std::string& a_path, double c) {
    sp::BorderedSpec spec{sp::io::read_symmetric(m_path, &std::cerr), sp::io::read_vector(a_path), c};
    spec.validate();
    return spec;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
    std::string input, vector;
    double c = 0.0;
    bool rank_one = false;
};

Result cmd_bounds(const BoundsArgs& a) {
    const auto spec = load_spec(a.input, a.vector, a.c);
    const auto analysis = sp::bounds::analyze_spec(spec);
    Result r;
    r.doc = sp::report::to_json(analysis);
    r.table = reports_json(analysis.reports);
    if (a.rank_one) {
        const auto ro = sp::bounds::analyze_rank_one(spec.m, spec.a);
        r.doc["rank_one"] = reports_json(ro);
        for (const auto& x : ro) r.table.push_back(sp::report::to_json(x));
    }
    return r;
}

// ---------------------------------------------------------------- secular

Result cmd_secular(const BoundsArgs& a) {
    const auto spec = load_spec(a.input, a.vector, a.c);
    const sp::Spectrum ms = sp::jacobi_eigen(spec.m);
    const auto arrow = sp::to_arrowhead(spec, ms);
    const auto problem = sp::secular::SecularProblem::from_arrowhead(arrow);
    const sp::Spectrum as = sp::jacobi_eigen(sp::assemble_bordered(spec));
    Result r;
    r.doc = {{"poles", arrow.poles},
             {"border", arrow.border},
             {"c", arrow.c},
             {"lambda_max", sp::secular::largest_eigenvalue(problem)},
             {"lambda_min", sp::secular::smallest_eigenvalue(problem)},
             {"root_upper_bound", sp::secular::root_upper_bound(problem)},
             {"lambda_max_oracle", as.largest()},
             {"lambda_min_oracle", as.smallest()},
             {"spectrum_oracle", as.eigenvalues}};
    r.table = {{"lambda_max", r.doc["lambda_max"]},
               {"lambda_min", r.doc["lambda_min"]},
               {"root_upper_bound", r.doc["root_upper_bound"]},
               {"lambda_max_oracle", r.doc["lambda_max_oracle"]},
               {"lambda_min_oracle", r.doc["lambda_min_oracle"]}};
    return r;
}

// ---------------------------------------------------------------- graph

struct GraphArgs {
    std::string edges;
    std::vector<std::size_t> del;
};

Result cmd_graph(const GraphArgs& a) {
    const sp::graph::Graph g = sp::io::read_graph(a.edges);
    if (g.n() < 2) throw sp::InputError("graph: need at least 2 vertices");
    const sp::Spectrum ls = sp::jacobi_eigen(sp::graph::laplacian(g));
    Result r;
    r.doc = {{"n", g.n()},
             {"edges", g.edge_count()},
             {"components", g.component_count()},
             {"algebraic_connectivity", sp::graph::algebraic_connectivity(g)},
             {"complement_lower_bound", sp::graph::connectivity_lower_from_complement(g)},
             {"laplacian_spectrum", ls.eigenvalues}};
    r.table = {{"n", g.n()},
               {"edges", g.edge_count()},
               {"components", g.component_count()},
               {"algebraic_connectivity", r.doc["algebraic_connectivity"]},
               {"complement_lower_bound", r.doc["complement_lower_bound"]}};
    if (!a.del.empty()) {
        const sp::graph::Edge e{a.del.at(0), a.del.at(1)};
        const auto rep = sp::graph::edge_append_bound(g, e);
        json j = sp::report::to_json(rep);
        j["deleted"] = {e.first, e.second};
        r.doc["edge_deletion"] = j;
        r.table = json::array({sp::report::to_json(rep)});
    }
    return r;
}

// ---------------------------------------------------------------- pinning

struct PinningArgs {
    std::string problem;
    std::optional<double> kappa;
    std::string sweep;
    std::optional<std::size_t> enumerate;
};

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json threshold_json(const sp::pinning::KappaThreshold& t) {
    return {{"value", opt(t.value)}, {"margin", t.margin}, {"reason", t.reason}};
}

std::vector<double> parse_sweep(const std::string& s) {
    std::vector<double> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw sp::InputError("--kappa-sweep: cannot parse '" + item + "'");
        }
    }
    if (parts.size() != 3) throw sp::InputError("--kappa-sweep expects start:stop:step");
    const double lo = parts[0], hi = parts[1], step = parts[2];
    if (!(step > 0.0) || !(hi >= lo)) throw sp::InputError("--kappa-sweep needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 100000) throw sp::InputError("--kappa-sweep: too many points");
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
}

json pinning_row(const sp::pinning::PinningProblem& p) {
    const auto ctl = sp::pinning::controllability_condition(p);
    return {{"kappa", p.kappa},
            {"iterative_bound", opt(sp::pinning::iterative_pinning_lower_bound(p))},
            {"weighted_bound", opt(sp::pinning::weighted_pinning_lower_bound(p))},
            {"exact", sp::pinning::exact_pinned_smallest_positive(p)},
            {"lambda_min", ctl.lambda_min},
            {"controllable", ctl.controllable}};
}

Result cmd_pinning(const PinningArgs& a) {
    sp::pinning::PinningProblem p = sp::io::read_pinning_problem(a.problem);
    if (a.kappa) p.kappa = *a.kappa;
    p.validate();
    Result r;
    if (!a.sweep.empty()) {
        json rows = json::array();
        for (double k : parse_sweep(a.sweep)) {
            p.kappa = k;
            rows.push_back(pinning_row(p));
        }
        r.doc = {{"sweep", rows}};
        r.table = rows;
        return r;
    }
    const auto ctl = sp::pinning::controllability_condition(p);
    r.doc = pinning_row(p);
    r.doc["laplacian_smallest_positive"] = opt(sp::pinning::laplacian_smallest_positive(p));
    r.doc["required_level"] = p.required_level();
    r.doc["margin"] = ctl.margin;
    r.doc["kappa_threshold"] = threshold_json(sp::pinning::kappa_threshold(p));
    r.doc["weighted_kappa_threshold"] = threshold_json(sp::pinning::weighted_kappa_threshold(p));
    if (a.enumerate) {
        const auto best = sp::pinning::best_pin_set(p, *a.enumerate);
        r.doc["best_pin_set"] = {{"pinned", best.pinned}, {"lambda_min", best.lambda_min}};
    }
    r.table = r.doc;
    r.table.erase("kappa_threshold");
    r.table.erase("weighted_kappa_threshold");
    r.table.erase("best_pin_set");
    r.table["kappa_threshold"] = opt(sp::pinning::kappa_threshold(p).value);
    r.table["weighted_kappa_threshold"] = opt(sp::pinning::weighted_kappa_threshold(p).value);
    return r;
}

// ---------------------------------------------------------------- cs

struct CsArgs {
    std::string gen;
    std::string input;
    std::size_t n = 20, p = 40;
    sp::cs::SubsetExperiment exp;
};

Result cmd_cs(const CsArgs& a) {
    sp::cs::DesignMatrix dm;
    if (!a.input.empty()) {
        dm = sp::cs::DesignMatrix(sp::io::read_matrix(a.input), true);
    } else {
        sp::cs::Ensemble kind;
        if (a.gen == "gaussian") kind = sp::cs::Ensemble::gaussian;
        else if (a.gen == "bernoulli") kind = sp::cs::Ensemble::bernoulli;
        else throw sp::InputError("--gen must be gaussian or bernoulli");
        dm = sp::cs::generate_design(kind, a.n, a.p, a.exp.seed);
    }
    const auto rep = sp::cs::cross_gram_tail(dm, a.exp, sp::cs::threads_from_env());
    Result r;
    r.doc = sp::report::to_json(rep);
    r.table = r.doc;
    r.code = rep.bound_violations == 0 ? kOk : kViolation;
    return r;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    sp::verify::Options opts;
    std::string emit;
    std::size_t emit_count = 5;
};

Result cmd_verify(const VerifyArgs& a, double tol) {
    sp::verify::Options o = a.opts;
    o.tol = tol;
    if (o.dim > 12) throw sp::InputError("verify: --dim must be <= 12");
    Result r;
    if (!a.emit.empty()) {
        sp::verify::emit_fixtures(o, a.emit_count, a.emit);
        std::cerr << "wrote " << a.emit_count << " fixtures to " << a.emit << "\n";
    }
    if (o.trials == 0) std::cerr << "warning: --trials 0, nothing checked (vacuous pass)\n";
    const auto summary = sp::verify::run(o);
    r.doc = sp::verify::to_json(summary);
    r.table = r.doc["invariants"];
    if (!summary.ok()) {
        r.code = kViolation;
        std::cerr << summary.total_violations() << " violation(s); offending instances:\n";
        for (const auto& f : r.doc["failures"]) std::cerr << f.dump() << "\n";
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds on the extreme eigenvalues of bordered symmetric matrices"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--out", g.out, "Write the report to this file instead of stdout");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", g.tol, "Relative tolerance for bound checks")->check(CLI::PositiveNumber);

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Every bound on lambda_max, lambda_min and ||A|| with exact values");
    bounds->add_option("--input", ba.input, "Matrix M (CSV, or JSON with .json extension)")->required();
    bounds->add_option("--vector", ba.vector, "Border vector a (CSV row/column or JSON)")->required();
    bounds->add_option("--c", ba.c, "Corner scalar c")->required();
    bounds->add_flag("--rank-one", ba.rank_one, "Also bound lambda_1(M + a a^t)");

    BoundsArgs sa;
    auto* secular = app.add_subcommand("secular", "Extreme eigenvalues via the secular equation");
    secular->add_option("--input", sa.input, "Matrix M")->required();
    secular->add_option("--vector", sa.vector, "Border vector a")->required();
    secular->add_option("--c", sa.c, "Corner scalar c")->required();

    GraphArgs ga;
    auto* graph = app.add_subcommand("graph", "Algebraic connectivity and edge-deletion bounds");
    graph->add_option("--edges", ga.edges, "Edge list ('n m' header then m lines 'u v') or graph JSON")->required();
    graph->add_option("--delete", ga.del, "Edge u v to delete")->expected(2);

    PinningArgs pa;
    auto* pin = app.add_subcommand("pinning", "Pinning controllability bounds");
    pin->add_option("--problem", pa.problem, "Pinning problem JSON")->required();
    pin->add_option("--kappa", pa.kappa, "Override the feedback gain");
    pin->add_option("--kappa-sweep", pa.sweep, "start:stop:step, emits bound vs exact per gain");
    pin->add_option("--enumerate", pa.enumerate, "Exhaustive best pin set of this size (N <= 12)");

    CsArgs ca;
    auto* cs = app.add_subcommand("cs", "Random-submatrix experiments on a design matrix");
    cs->add_option("--gen", ca.gen, "Random design ensemble")->check(CLI::IsMember({"gaussian", "bernoulli"}));
    cs->add_option("--input", ca.input, "Design matrix file (columns are normalized)");
    cs->add_option("--n", ca.n, "Rows of the generated design");
    cs->add_option("--p", ca.p, "Columns of the generated design");
    cs->add_option("--s", ca.exp.s, "Subset size");
    cs->add_option("--trials", ca.exp.trials, "Number of trials");
    cs->add_option("--seed", ca.exp.seed, "Seed");
    cs->add_option("--t", ca.exp.t, "Tail offset t");
    cs->add_option("--rho", ca.exp.rho, "Restricted isometry target");
    cs->add_option("--C", ca.exp.c_const, "Constant in the maximal subset size");

    VerifyArgs va;
    va.opts.seed = 1;
    va.opts.trials = 1000;
    auto* ver = app.add_subcommand("verify", "Invariant battery on random instances");
    ver->add_option("--seed", va.opts.seed, "Seed");
    ver->add_option("--trials", va.opts.trials, "Number of random trials");
    ver->add_option("--dim", va.opts.dim, "Dimension of M (2..12)");
    ver->add_option("--emit", va.emit, "Write fixture files for the bounds command into this directory");
    ver->add_option("--emit-count", va.emit_count, "Number of fixtures to write");
    ver->add_flag("--inject-fault", va.opts.inject_fault, "Corrupt the Li-Li upper bound (self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        Result r;
        if (*bounds) r = cmd_bounds(ba);
        else if (*secular) r = cmd_secular(sa);
        else if (*graph) r = cmd_graph(ga);
        else if (*pin) r = cmd_pinning(pa);
        else if (*cs) {
            if (ca.gen.empty() == ca.input.empty()) throw sp::InputError("cs: give exactly one of --gen or --input");
            r = cmd_cs(ca);
        } else r = cmd_verify(va, g.tol);
        write_output(g, r);
        return r.code;
    } catch (const sp::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const sp::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
