#include "spectral_perturb/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace spectral_perturb::io {

using nlohmann::json;

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& cell, std::size_t line) {
    const std::string t = trim(cell);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (t.empty() || used != t.size()) {
        std::ostringstream os;
        os << "line " << line << ": cannot parse number '" << t << "'";
        throw InputError(os.str());
    }
    return v;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

Matrix matrix_from_json(const json& j) {
    const json& entries = j.is_object() ? j.at("entries") : j;
    if (!entries.is_array()) throw InputError("matrix JSON: entries must be an array of rows");
    std::vector<Vector> rows;
    for (const auto& r : entries) rows.push_back(r.get<Vector>());
    Matrix m = Matrix::from_rows(rows);
    if (j.is_object() && j.contains("dim")) {
        const auto d = j.at("dim").get<std::size_t>();
        if (m.rows() != d || m.cols() != d) throw InputError("matrix JSON: entries do not match dim");
    }
    return m;
}

graph::Graph graph_from_json(const json& j) {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<graph::Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("graph JSON: each edge must be [u, v]");
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return graph::Graph(n, std::move(edges));
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Matrix parse_matrix_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Vector> rows;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        Vector row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(parse_double(cell, lineno));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError("matrix CSV is empty");
    return Matrix::from_rows(rows);
}

Matrix parse_matrix_json(const std::string& text) {
    try {
        return matrix_from_json(parse_json(text));
    } catch (const json::exception& e) {
        throw InputError(std::string("matrix JSON: ") + e.what());
    }
}

Matrix read_matrix(const std::string& path) {
    const std::string text = read_file(path);
    return ends_with(path, ".json") ? parse_matrix_json(text) : parse_matrix_csv(text);
}

SymmetricMatrix to_symmetric(const Matrix& m, std::ostream* warn) {
    double asym = 0.0;
    SymmetricMatrix s = SymmetricMatrix::symmetrize(m, &asym);
    if (warn && asym > 1e-8)
        *warn << "warning: input matrix asymmetric (max |m_ij - m_ji| = " << asym << "), symmetrized\n";
    return s;
}

SymmetricMatrix read_symmetric(const std::string& path, std::ostream* warn) {
    return to_symmetric(read_matrix(path), warn);
}

Vector parse_vector_csv(const std::string& text) {
    const Matrix m = parse_matrix_csv(text);
    if (m.rows() == 1) return m.row(0);
    if (m.cols() == 1) return m.column(0);
    throw InputError("vector CSV must be a single row or a single column");
}

Vector parse_vector_json(const std::string& text) {
    try {
        const json j = parse_json(text);
        Vector v = j.is_object() ? j.at("entries").get<Vector>() : j.get<Vector>();
        if (j.is_object() && j.contains("dim") && j.at("dim").get<std::size_t>() != v.size())
            throw InputError("vector JSON: entries do not match dim");
        return v;
    } catch (const json::exception& e) {
        throw InputError(std::string("vector JSON: ") + e.what());
    }
}

Vector read_vector(const std::string& path) {
    const std::string text = read_file(path);
    Vector v = ends_with(path, ".json") ? parse_vector_json(text) : parse_vector_csv(text);
    require_finite(v, "vector file");
    return v;
}

graph::Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::size_t n = 0, m = 0;
    if (!(in >> n >> m)) throw InputError("edge list: expected header 'n m'");
    std::vector<graph::Edge> edges;
    for (std::size_t k = 0; k < m; ++k) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) + " edges");
        if (u < 0 || v < 0) throw InputError("edge list: negative vertex index");
        edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    std::string rest;
    if (in >> rest) throw InputError("edge list: trailing content after " + std::to_string(m) + " edges");
    return graph::Graph(n, std::move(edges));
}

graph::Graph parse_graph_json(const std::string& text) {
    try {
        return graph_from_json(parse_json(text));
    } catch (const json::exception& e) {
        throw InputError(std::string("graph JSON: ") + e.what());
    }
}

graph::Graph read_graph(const std::string& path) {
    const std::string text = read_file(path);
    return ends_with(path, ".json") ? parse_graph_json(text) : parse_edge_list(text);
}

pinning::PinningProblem parse_pinning_json(const std::string& text) {
    try {
        const json j = parse_json(text);
        pinning::PinningProblem p;
        p.graph = graph_from_json(j.at("graph"));
        p.pinned = j.value("pinned", std::vector<std::size_t>{});
        p.sigma = j.value("sigma", 1.0);
        p.kappa = j.value("kappa", 0.0);
        p.f_bound = j.value("f_bound", 0.0);
        if (j.contains("Q") || j.contains("B")) {
            const auto s = pinning::scalars_from_matrices(matrix_from_json(j.at("Q")), matrix_from_json(j.at("B")));
            p.q_norm = s.q_norm;
            p.qb_min = s.qb_min;
        } else {
            p.q_norm = j.at("q_norm").get<double>();
            p.qb_min = j.at("qb_min").get<double>();
        }
        p.validate();
        return p;
    } catch (const json::exception& e) {
        throw InputError(std::string("pinning JSON: ") + e.what());
    }
}

pinning::PinningProblem read_pinning_problem(const std::string& path) {
    return parse_pinning_json(read_file(path));
}

void write_matrix_csv(std::ostream& os, const Matrix& m) {
    const auto old = os.precision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << '\n';
    }
    os.precision(old);
}

}  // namespace spectral_perturb::io
