#include "spectral_perturb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace spectral_perturb {

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InputError("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double norm2(std::span<const double> x) {
    // scaled accumulation, avoids overflow for large entries
    double scale = 0.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0.0;
    double s = 0.0;
    for (double v : x) s += (v / scale) * (v / scale);
    return scale * std::sqrt(s);
}

void require_finite(std::span<const double> x, const char* what) {
    for (double v : x)
        if (!std::isfinite(v)) throw InputError(std::string(what) + ": non-finite entry");
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.cols_);
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= cols_) throw InputError("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out(i, k) = (*this)(i, idx[k]);
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product: inner dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

Vector operator*(const Matrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) throw InputError("matrix-vector product: dimension mismatch");
    Vector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

// ------------------------------------------------------- SymmetricMatrix

SymmetricMatrix::SymmetricMatrix(std::size_t dim) : m_(dim, dim) {}

SymmetricMatrix SymmetricMatrix::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("symmetric matrix must be square");
    require_finite(m.data(), "symmetric matrix");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) throw InputError("matrix is not symmetric");
    SymmetricMatrix s;
    s.m_ = m;
    return s;
}

SymmetricMatrix SymmetricMatrix::symmetrize(const Matrix& m, double* max_asymmetry) {
    if (m.rows() != m.cols()) throw InputError("symmetric matrix must be square");
    require_finite(m.data(), "symmetric matrix");
    SymmetricMatrix s(m.rows());
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s.m_(i, i) = m(i, i);
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
            s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
        }
    }
    if (max_asymmetry) *max_asymmetry = worst;
    return s;
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim) {
    SymmetricMatrix s(dim);
    for (std::size_t i = 0; i < dim; ++i) s.m_(i, i) = 1.0;
    return s;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> diag) {
    SymmetricMatrix s(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) s.m_(i, i) = diag[i];
    return s;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double v) {
    m_(i, j) += v;
    if (i != j) m_(j, i) += v;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i);
    return t;
}

double SymmetricMatrix::frobenius_norm() const { return norm2(m_.data()); }

SymmetricMatrix SymmetricMatrix::operator+(const SymmetricMatrix& o) const {
    if (dim() != o.dim()) throw InputError("symmetric sum: dimension mismatch");
    SymmetricMatrix r(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) r.m_(i, j) = m_(i, j) + o.m_(i, j);
    return r;
}

SymmetricMatrix SymmetricMatrix::operator-(const SymmetricMatrix& o) const {
    return *this + o.scaled(-1.0);
}

SymmetricMatrix SymmetricMatrix::scaled(double s) const {
    SymmetricMatrix r(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) r.m_(i, j) = s * m_(i, j);
    return r;
}

// ------------------------------------------------------------- bordered

void BorderedSpec::validate() const {
    if (a.size() != m.dim()) {
        std::ostringstream os;
        os << "bordered spec: length(a) = " << a.size() << " but dim(M) = " << m.dim();
        throw InputError(os.str());
    }
    require_finite(a, "border vector a");
    if (!std::isfinite(c)) throw InputError("corner c is not finite");
}

SymmetricMatrix assemble_bordered(const BorderedSpec& spec) {
    spec.validate();
    const std::size_t d = spec.dim();
    SymmetricMatrix out(d + 1);
    out.set(0, 0, spec.c);
    for (std::size_t i = 0; i < d; ++i) {
        out.set(0, i + 1, spec.a[i]);
        for (std::size_t j = i; j < d; ++j) out.set(i + 1, j + 1, spec.m(i, j));
    }
    return out;
}

SymmetricMatrix assemble_arrowhead(const ArrowheadForm& arrow) {
    return assemble_bordered({SymmetricMatrix::diagonal(arrow.poles), arrow.border, arrow.c});
}

// --------------------------------------------------------------- Jacobi

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = tau >= 0.0 ? 1.0 / (tau + std::hypot(1.0, tau))
                                : -1.0 / (-tau + std::hypot(1.0, tau));
    const double c = 1.0 / std::hypot(1.0, t);
    const double s = t * c;
    const std::size_t n = a.rows();

    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = a(k, p);
        const double akq = a(k, q);
        const double np = c * akp - s * akq;
        const double nq = s * akp + c * akq;
        a(k, p) = a(p, k) = np;
        a(k, q) = a(q, k) = nq;
    }
    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = a(q, p) = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

Spectrum jacobi_eigen(const SymmetricMatrix& m, const JacobiOptions& opts) {
    require_finite(m.as_matrix().data(), "jacobi_eigen input");
    const std::size_t n = m.dim();
    Matrix a = m.as_matrix();
    Matrix v = Matrix::identity(n);
    const double threshold = opts.tolerance * (1.0 + m.frobenius_norm());

    double off = off_diagonal_norm(a);
    int sweep = 0;
    while (off >= threshold) {
        if (sweep == opts.max_sweeps) {
            std::ostringstream os;
            os << "jacobi_eigen: no convergence after " << sweep
               << " sweeps (off-diagonal norm " << off << ")";
            throw NumericalError(os.str(), off);
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        off = off_diagonal_norm(a);
        ++sweep;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.eigenvalues[k] = a(src, src);
        std::size_t arg = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(v(i, src)) > std::abs(v(arg, src))) arg = i;
        const double sign = v(arg, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = sign * v(i, src);
    }
    return out;
}

ArrowheadForm to_arrowhead(const BorderedSpec& spec) {
    spec.validate();
    return to_arrowhead(spec, jacobi_eigen(spec.m));
}

ArrowheadForm to_arrowhead(const BorderedSpec& spec, const Spectrum& s) {
    spec.validate();
    if (s.size() != spec.dim()) throw InputError("to_arrowhead: spectrum dimension mismatch");
    ArrowheadForm out;
    out.poles = s.eigenvalues;
    out.c = spec.c;
    out.border.resize(spec.dim());
    for (std::size_t j = 0; j < spec.dim(); ++j) out.border[j] = dot(spec.a, s.vector(j));
    return out;
}

SymmetricMatrix rank_one_update(const SymmetricMatrix& m, std::span<const double> x) {
    if (x.size() != m.dim()) throw InputError("rank_one_update: dimension mismatch");
    require_finite(x, "rank_one_update vector");
    SymmetricMatrix out = m;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i; j < x.size(); ++j) out.set(i, j, m(i, j) + x[i] * x[j]);
    return out;
}

double operator_norm(const SymmetricMatrix& m) {
    if (m.dim() == 0) return 0.0;
    const Spectrum s = jacobi_eigen(m);
    return std::max(std::abs(s.largest()), std::abs(s.smallest()));
}

SymmetricMatrix gram(const Matrix& x) {
    SymmetricMatrix g(x.cols());
    for (std::size_t i = 0; i < x.cols(); ++i)
        for (std::size_t j = i; j < x.cols(); ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < x.rows(); ++k) s += x(k, i) * x(k, j);
            g.set(i, j, s);
        }
    return g;
}

SymmetricMatrix outer_gram(const Matrix& x) { return gram(x.transpose()); }

double projection_norm_sq(const Spectrum& s, std::span<const double> x, std::size_t first,
                          std::size_t last) {
    if (x.size() != s.size()) throw InputError("projection: dimension mismatch");
    double total = 0.0;
    for (std::size_t k = first; k < std::min(last, s.size()); ++k) {
        const double b = dot(x, s.vector(k));
        total += b * b;
    }
    return total;
}

std::size_t leading_multiplicity(const Spectrum& s, double rel_tol) {
    if (s.size() == 0) return 0;
    const double tol = rel_tol * (1.0 + std::abs(s.largest()));
    std::size_t k = 1;
    while (k < s.size() && s.largest() - s.eigenvalues[k] <= tol) ++k;
    return k;
}

}  // namespace spectral_perturb
