#pragma once

#include <iosfwd>
#include <string>

#include "spectral_perturb/graph.hpp"
#include "spectral_perturb/linalg.hpp"
#include "spectral_perturb/pinning.hpp"

namespace spectral_perturb::io {

// Matrices: CSV (one row per line, comma-separated) or JSON
// {"dim": d, "entries": [[...], ...]}; the format follows the file extension
// (".json" selects JSON). Parse failures throw InputError.

Matrix parse_matrix_csv(const std::string& text);
Matrix parse_matrix_json(const std::string& text);
Matrix read_matrix(const std::string& path);

/// Reads a square matrix and symmetrizes it as (m + m^t)/2. A warning goes to
/// `warn` (if non-null) when the largest asymmetry exceeds 1e-8.
SymmetricMatrix read_symmetric(const std::string& path, std::ostream* warn);
SymmetricMatrix to_symmetric(const Matrix& m, std::ostream* warn);

/// Vectors: CSV as a single row or single column; JSON as a bare array or
/// {"dim": d, "entries": [...]}.
Vector parse_vector_csv(const std::string& text);
Vector parse_vector_json(const std::string& text);
Vector read_vector(const std::string& path);

/// Graphs: edge list with header "n m" followed by m lines "u v" (0-indexed),
/// or JSON {"n": n, "edges": [[u, v], ...]}.
graph::Graph parse_edge_list(const std::string& text);
graph::Graph parse_graph_json(const std::string& text);
graph::Graph read_graph(const std::string& path);

/// JSON {"graph": {...}, "pinned": [...], "sigma", "kappa", "f_bound",
/// "q_norm", "qb_min"}, or with "Q" and "B" matrices in place of q_norm and
/// qb_min. kappa defaults to 0 when absent.
pinning::PinningProblem parse_pinning_json(const std::string& text);
pinning::PinningProblem read_pinning_problem(const std::string& path);

std::string read_file(const std::string& path);
void write_matrix_csv(std::ostream& os, const Matrix& m);

}  // namespace spectral_perturb::io
