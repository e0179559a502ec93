#include <gtest/gtest.h>

#include <cmath>

#include "spectral_perturb/linalg.hpp"
#include "spectral_perturb/random_instances.hpp"
#include "support.hpp"

using namespace spectral_perturb;

TEST(Assemble, BlockDiagonal) {
    const BorderedSpec spec{SymmetricMatrix::identity(1), {0.0}, 2.0};
    const Matrix a = assemble_bordered(spec).as_matrix();
    EXPECT_EQ(a, Matrix::from_rows({{2, 0}, {0, 1}}));
}

TEST(Assemble, DirectPlacement) {
    const BorderedSpec spec{SymmetricMatrix::identity(2), {1.0, 0.0}, 1.0};
    EXPECT_EQ(assemble_bordered(spec).as_matrix(), Matrix::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
}

TEST(Assemble, GramOfAugmentedColumns) {
    SplitMix64 rng(7);
    const Matrix x = random::gaussian_matrix(rng, 3, 2);
    const Vector col = random::gaussian_vector(rng, 3);
    const BorderedSpec spec{gram(x), x.transpose() * std::span<const double>(col), dot(col, col)};
    const SymmetricMatrix a = assemble_bordered(spec);
    // [x X]^t [x X] formed column by column
    std::vector<Vector> cols{col, x.column(0), x.column(1)};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(a(i, j), dot(cols[i], cols[j]), 1e-14);
}

TEST(Assemble, DimensionMismatchThrows) {
    const BorderedSpec spec{SymmetricMatrix::identity(2), {1.0}, 0.0};
    EXPECT_THROW(assemble_bordered(spec), InputError);
}

TEST(SymmetricMatrixTest, RejectsAsymmetricAndNonFinite) {
    EXPECT_THROW(SymmetricMatrix::from_matrix(Matrix::from_rows({{1, 2}, {3, 1}})), InputError);
    EXPECT_THROW(SymmetricMatrix::from_matrix(Matrix::from_rows({{1, 2, 3}, {2, 1, 0}})), InputError);
    EXPECT_THROW(SymmetricMatrix::from_matrix(Matrix::from_rows({{NAN, 0}, {0, 1}})), InputError);
    double asym = 0.0;
    const auto s = SymmetricMatrix::symmetrize(Matrix::from_rows({{1, 2}, {4, 1}}), &asym);
    EXPECT_DOUBLE_EQ(asym, 2.0);
    EXPECT_DOUBLE_EQ(s(0, 1), 3.0);
    EXPECT_DOUBLE_EQ(s(1, 0), 3.0);
}

TEST(Jacobi, Identity) {
    const Spectrum s = jacobi_eigen(SymmetricMatrix::identity(3));
    EXPECT_EQ(s.eigenvalues, (Vector{1, 1, 1}));
}

TEST(Jacobi, TwoByTwo) {
    const Spectrum s = jacobi_eigen(SymmetricMatrix::from_matrix(Matrix::from_rows({{0, 1}, {1, 0}})));
    EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-15);
    EXPECT_NEAR(s.eigenvalues[1], -1.0, 1e-15);
}

TEST(Jacobi, EmptyMatrix) { EXPECT_EQ(jacobi_eigen(SymmetricMatrix(0)).size(), 0U); }

TEST(Jacobi, RandomAgainstOracle) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 1 + rng.below(9);
        const SymmetricMatrix m = random::gaussian_symmetric(rng, d);
        const Spectrum s = jacobi_eigen(m);
        const auto ref = oracle::eigenvalues(support::dense(m));
        for (std::size_t k = 0; k < d; ++k) EXPECT_NEAR(s.eigenvalues[k], ref[k], 1e-10);

        double sum = 0.0;
        for (double x : s.eigenvalues) sum += x;
        EXPECT_NEAR(sum, m.trace(), 1e-10);

        // M V_k = lambda_k V_k, orthonormal columns
        for (std::size_t k = 0; k < d; ++k) {
            const Vector v = s.vector(k);
            const Vector mv = m.as_matrix() * std::span<const double>(v);
            for (std::size_t i = 0; i < d; ++i) EXPECT_NEAR(mv[i], s.eigenvalues[k] * v[i], 1e-10);
            for (std::size_t l = 0; l < d; ++l) EXPECT_NEAR(dot(v, s.vector(l)), k == l ? 1.0 : 0.0, 1e-12);
        }
    }
}

TEST(Jacobi, SignConvention) {
    SplitMix64 rng(3);
    const Spectrum s = jacobi_eigen(random::gaussian_symmetric(rng, 5));
    for (std::size_t k = 0; k < 5; ++k) {
        const Vector v = s.vector(k);
        std::size_t arg = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
        EXPECT_GT(v[arg], 0.0);
    }
}

TEST(Jacobi, Deterministic) {
    SplitMix64 rng(5);
    const SymmetricMatrix m = random::gaussian_symmetric(rng, 7);
    const Spectrum a = jacobi_eigen(m), b = jacobi_eigen(m);
    EXPECT_EQ(a.eigenvalues, b.eigenvalues);
    EXPECT_EQ(a.eigenvectors, b.eigenvectors);
}

TEST(Jacobi, NonConvergenceReportsResidual) {
    SplitMix64 rng(9);
    const SymmetricMatrix m = random::gaussian_symmetric(rng, 8);
    try {
        jacobi_eigen(m, {.max_sweeps = 1, .tolerance = 1e-12});
        FAIL() << "expected NumericalError";
    } catch (const NumericalError& e) {
        EXPECT_GT(e.residual(), 0.0);
    }
}

TEST(Arrowhead, DiagonalM) {
    const BorderedSpec spec{SymmetricMatrix::diagonal(Vector{1.0, 3.0, 2.0}), {0.5, -0.7, 0.2}, 0.0};
    const ArrowheadForm arrow = to_arrowhead(spec);
    EXPECT_EQ(arrow.poles, (Vector{3, 2, 1}));
    EXPECT_DOUBLE_EQ(std::abs(arrow.border[0]), 0.7);
    EXPECT_DOUBLE_EQ(std::abs(arrow.border[1]), 0.2);
    EXPECT_DOUBLE_EQ(std::abs(arrow.border[2]), 0.5);
}

TEST(Arrowhead, BorderAlongLeadingEigenvector) {
    SplitMix64 rng(21);
    BorderedSpec spec{random::gaussian_symmetric(rng, 4), {}, 0.3};
    spec.a = jacobi_eigen(spec.m).vector(0);
    const ArrowheadForm arrow = to_arrowhead(spec);
    EXPECT_NEAR(std::abs(arrow.border[0]), 1.0, 1e-12);
    for (std::size_t j = 1; j < 4; ++j) EXPECT_NEAR(arrow.border[j], 0.0, 1e-12);
}

TEST(Arrowhead, SimilarityPreservesSpectrum) {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const BorderedSpec spec = random::gaussian_spec(rng, 5);
        const auto a = oracle::eigenvalues(support::dense(assemble_bordered(spec)));
        const auto b = oracle::eigenvalues(support::dense(assemble_arrowhead(to_arrowhead(spec))));
        for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-9);
    }
}

TEST(RankOne, Examples) {
    const Vector x{1.0, 2.0};
    EXPECT_EQ(rank_one_update(SymmetricMatrix(2), x).as_matrix(), Matrix::from_rows({{1, 2}, {2, 4}}));
    EXPECT_EQ(rank_one_update(SymmetricMatrix::identity(2), Vector{1.0, 0.0}).as_matrix(),
              Matrix::from_rows({{2, 0}, {0, 1}}));
}

TEST(OperatorNorm, Examples) {
    EXPECT_DOUBLE_EQ(operator_norm(SymmetricMatrix::diagonal(Vector{3.0, -5.0})), 5.0);
    EXPECT_DOUBLE_EQ(operator_norm(SymmetricMatrix::identity(4)), 1.0);
    SplitMix64 rng(2);
    const SymmetricMatrix m = random::gaussian_symmetric(rng, 6);
    EXPECT_NEAR(operator_norm(m), oracle::spectral_norm(support::dense(m)), 1e-10);
}

TEST(Projection, SumsToNorm) {
    SplitMix64 rng(4);
    const SymmetricMatrix m = random::gaussian_symmetric(rng, 5);
    const Vector x = random::gaussian_vector(rng, 5);
    const Spectrum s = jacobi_eigen(m);
    EXPECT_NEAR(projection_norm_sq(s, x, 0, 5), dot(x, x), 1e-12);
    EXPECT_NEAR(projection_norm_sq(s, x, 0, 2), projection_norm_sq(s, x, 0, 1) + projection_norm_sq(s, x, 1, 2),
                1e-12);
}

TEST(Multiplicity, RepeatedTop) {
    EXPECT_EQ(leading_multiplicity(jacobi_eigen(SymmetricMatrix::diagonal(Vector{2.0, 2.0, 1.0}))), 2U);
    EXPECT_EQ(leading_multiplicity(jacobi_eigen(SymmetricMatrix::diagonal(Vector{3.0, 2.0, 1.0}))), 1U);
}
