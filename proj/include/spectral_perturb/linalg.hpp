#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectral_perturb {

/// Malformed input: dimension mismatch, non-finite entries, violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative method failed to converge.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

using Vector = std::vector<double>;

double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);
void require_finite(std::span<const double> x, const char* what);

/// Dense row-major rectangular matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;
    Matrix transpose() const;
    Matrix select_columns(std::span<const std::size_t> idx) const;

    std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> x);

/// Dense real symmetric matrix. Mutation goes through set(), which writes both
/// triangles so that entries(i,j) == entries(j,i) holds bit-exactly.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t dim);

    /// Throws InputError unless `m` is square, finite and exactly symmetric.
    static SymmetricMatrix from_matrix(const Matrix& m);

    /// Replaces m by (m + m^t)/2. `max_asymmetry` receives max |m_ij - m_ji|.
    static SymmetricMatrix symmetrize(const Matrix& m, double* max_asymmetry = nullptr);

    static SymmetricMatrix identity(std::size_t dim);
    static SymmetricMatrix diagonal(std::span<const double> diag);

    std::size_t dim() const noexcept { return m_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    void set(std::size_t i, std::size_t j, double v);
    void add(std::size_t i, std::size_t j, double v);

    double trace() const;
    double frobenius_norm() const;
    const Matrix& as_matrix() const noexcept { return m_; }

    SymmetricMatrix operator+(const SymmetricMatrix& o) const;
    SymmetricMatrix operator-(const SymmetricMatrix& o) const;
    SymmetricMatrix scaled(double s) const;

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    Matrix m_;
};

/// The bordered matrix A = [[c, a^t], [a, M]].
struct BorderedSpec {
    SymmetricMatrix m;
    Vector a;
    double c = 0.0;

    std::size_t dim() const noexcept { return m.dim(); }
    void validate() const;
};

/// Eigen-decomposition with eigenvalues sorted descending and eigenvectors
/// stored as the columns of `eigenvectors`.
struct Spectrum {
    Vector eigenvalues;
    Matrix eigenvectors;

    std::size_t size() const noexcept { return eigenvalues.size(); }
    double largest() const { return eigenvalues.front(); }
    double smallest() const { return eigenvalues.back(); }
    Vector vector(std::size_t k) const { return eigenvectors.column(k); }
};

/// Arrowhead reduction (D, b, c) of a bordered matrix: B = [[c, b^t], [b, diag(D)]].
struct ArrowheadForm {
    Vector poles;   // eigenvalues of M, descending
    Vector border;  // b_j = <a, V_j>
    double c = 0.0;
};

struct JacobiOptions {
    int max_sweeps = 100;
    double tolerance = 1e-12;  // relative to 1 + ||input||_F
};

SymmetricMatrix assemble_bordered(const BorderedSpec& spec);
SymmetricMatrix assemble_arrowhead(const ArrowheadForm& arrow);

/// Cyclic-by-row Jacobi eigensolver. Deterministic for fixed input.
/// Eigenvectors are signed so that their largest-magnitude entry is positive
/// (lowest index wins ties).
Spectrum jacobi_eigen(const SymmetricMatrix& m, const JacobiOptions& opts = {});

ArrowheadForm to_arrowhead(const BorderedSpec& spec);
ArrowheadForm to_arrowhead(const BorderedSpec& spec, const Spectrum& m_spectrum);

/// m + x x^t
SymmetricMatrix rank_one_update(const SymmetricMatrix& m, std::span<const double> x);

/// max_i |lambda_i(m)|
double operator_norm(const SymmetricMatrix& m);

/// X^t X
SymmetricMatrix gram(const Matrix& x);
/// X X^t
SymmetricMatrix outer_gram(const Matrix& x);

/// Squared norm of the projection of `x` onto span{V_k : k in [first, last)}.
double projection_norm_sq(const Spectrum& s, std::span<const double> x, std::size_t first,
                          std::size_t last);

/// Number of leading eigenvalues equal to the largest one within `rel_tol`
/// relative to 1 + |lambda_1|.
std::size_t leading_multiplicity(const Spectrum& s, double rel_tol = 1e-10);

}  // namespace spectral_perturb
