#include <gtest/gtest.h>

#include <cmath>

#include "spectral_perturb/bounds.hpp"
#include "spectral_perturb/random_instances.hpp"
#include "spectral_perturb/secular.hpp"
#include "support.hpp"

using namespace spectral_perturb;
using namespace spectral_perturb::bounds;

namespace {

LiLiInputs inputs(double l1, double c, double a_norm, double a_dot_v1) { return {l1, c, a_norm, a_dot_v1}; }

const BoundReport* find(const std::vector<BoundReport>& rs, const std::string& method) {
    for (const auto& r : rs)
        if (r.method == method) return &r;
    return nullptr;
}

}  // namespace

TEST(QuadraticCorrection, ZeroOverZero) {
    EXPECT_EQ(quadratic_correction(0.0, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(quadratic_correction(0.0, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(quadratic_correction(3.0, 4.0), 8.0 / (3.0 + 5.0));
}

TEST(LiLi, SharpOnBorderedIdentity) {
    const auto r = lili_two_sided(inputs(1.0, 1.0, 0.5, 0.5));
    EXPECT_DOUBLE_EQ(*r.lower, 1.5);
    EXPECT_DOUBLE_EQ(*r.upper, 1.5);
}

TEST(LiLi, ZeroBorder) {
    const auto r = lili_two_sided(inputs(1.0, 3.0, 0.0, 0.0));
    EXPECT_DOUBLE_EQ(*r.lower, 3.0);
    EXPECT_DOUBLE_EQ(*r.upper, 3.0);
}

TEST(LiLi, RejectsInconsistentInputs) {
    EXPECT_THROW(lili_two_sided(inputs(1.0, 0.0, -1.0, 0.0)), InputError);
    EXPECT_THROW(lili_two_sided(inputs(1.0, 0.0, 1.0, 2.0)), InputError);
    EXPECT_THROW(lili_two_sided(inputs(NAN, 0.0, 1.0, 0.0)), InputError);
}

TEST(LiLi, ExactForOneByOneM) {
    SplitMix64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const double m = rng.normal(), a = rng.normal(), c = rng.normal();
        const auto r = lili_two_sided(inputs(m, c, std::abs(a), std::abs(a)));
        const double exact = oracle::eig2(c, a, m).first;
        EXPECT_NEAR(*r.upper, exact, 1e-12 * (1 + std::abs(exact)));
        EXPECT_NEAR(*r.lower, exact, 1e-12 * (1 + std::abs(exact)));
    }
}

TEST(LiLi, SandwichRandomSpecs) {
    SplitMix64 rng(19);
    for (int t = 0; t < 200; ++t) {
        const BorderedSpec spec = random::gaussian_spec(rng, 5);
        const auto r = lili_two_sided(LiLiInputs::from_spec(spec));
        const double exact = oracle::largest(support::dense(spec));
        const double sec = secular::largest_eigenvalue(secular::SecularProblem::from_spec(spec));
        const double tol = 1e-9 * (1 + std::abs(exact));
        EXPECT_LE(*r.lower, exact + tol);
        EXPECT_GE(*r.upper, exact - tol);
        EXPECT_LE(*r.lower, sec + tol);
        EXPECT_GE(*r.upper, sec - tol);
    }
}

TEST(LiLi, ShiftEquivariance) {
    SplitMix64 rng(23);
    for (int t = 0; t < 50; ++t) {
        const auto in = inputs(rng.normal(), rng.normal(), 1.5, 0.7);
        const auto r = lili_two_sided(in);
        for (double s : {1.0, 10.0}) {
            const auto rs = lili_two_sided(inputs(in.lambda1 + s, in.c + s, in.a_norm, in.a_dot_v1));
            EXPECT_NEAR(*rs.lower - *r.lower, s, 1e-12 * (1 + s));
            EXPECT_NEAR(*rs.upper - *r.upper, s, 1e-12 * (1 + s));
            EXPECT_NEAR(weyl_arrowhead(in.lambda1 + s, in.c + s, 1.5) - weyl_arrowhead(in.lambda1, in.c, 1.5), s,
                        1e-12 * (1 + s));
        }
    }
}

TEST(Weyl, Examples) {
    EXPECT_DOUBLE_EQ(weyl_arrowhead(1.0, 1.0, 0.5), 1.5);
    EXPECT_DOUBLE_EQ(weyl_arrowhead(1.0, 3.0, 0.0), 3.0);
}

TEST(Mathias, Examples) {
    EXPECT_DOUBLE_EQ(*mathias_arrowhead(2.0, 0.0, 1.0), 2.5);
    EXPECT_FALSE(mathias_arrowhead(1.0, 1.0, 1.0).has_value());
}

TEST(Dominance, LiLiBelowWeylAndMathias) {
    SplitMix64 rng(29);
    for (int t = 0; t < 300; ++t) {
        const BorderedSpec spec = random::gaussian_spec(rng, 2 + rng.below(7));
        const auto in = LiLiInputs::from_spec(spec);
        const auto r = lili_two_sided(in);
        const double exact = oracle::largest(support::dense(spec));
        EXPECT_LE(*r.upper, weyl_arrowhead(in.lambda1, in.c, in.a_norm) + 1e-12);
        if (const auto m = mathias_arrowhead(in.lambda1, in.c, in.a_norm)) {
            EXPECT_LE(*r.upper, *m + 1e-12);
            if (std::abs(in.lambda1 - in.c) >= 0.5) EXPECT_GE(*m, exact - 1e-9);
        }
        EXPECT_GE(*r.lower, std::max(in.c, in.lambda1));
    }
}

TEST(WeylRankOne, Examples) {
    EXPECT_DOUBLE_EQ(weyl_rank_one(1.0, 0.0), 1.0);
    const Vector x{1.0, -2.0, 0.5};
    const auto rs = analyze_rank_one(SymmetricMatrix(3), x);
    EXPECT_NEAR(*find(rs, "weyl_rank_one")->exact, dot(x, x), 1e-12);
    EXPECT_DOUBLE_EQ(*find(rs, "weyl_rank_one")->upper, dot(x, x));
}

TEST(SmallestNonzero, Examples) {
    EXPECT_DOUBLE_EQ(smallest_nonzero_lower(1.0, 1.0, 0.5, 3), 0.5);
    EXPECT_DOUBLE_EQ(smallest_nonzero_lower(2.0, 5.0, 0.0, 2), 2.0);
    EXPECT_DOUBLE_EQ(smallest_nonzero_lower(2.0, 0.5, 0.0, 2), 0.5);
    EXPECT_THROW(smallest_nonzero_lower(0.0, 1.0, 0.5, 1), InputError);
    // bordered identity: lambda_{d+1}(A) = 1 - ||a|| exactly
    const BorderedSpec spec{SymmetricMatrix::identity(3), {0.3, 0.4, 0.0}, 1.0};
    EXPECT_NEAR(oracle::smallest(support::dense(spec)), 0.5, 1e-14);
}

TEST(SmallestNonzero, Corollaries) {
    auto c1 = smallest_nonzero_corollaries(1.0, 1.0, 0.5);
    EXPECT_DOUBLE_EQ(c1.weyl, 0.5);
    EXPECT_FALSE(c1.mathias.has_value());
    auto c2 = smallest_nonzero_corollaries(2.0, 1.0, 1.0);
    EXPECT_DOUBLE_EQ(c2.weyl, 0.0);
    EXPECT_DOUBLE_EQ(*c2.mathias, 0.0);
}

TEST(SmallestNonzero, RandomPsdSpecs) {
    SplitMix64 rng(37);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = 3 + rng.below(5);
        const std::size_t r = 1 + rng.below(d - 1);
        const BorderedSpec spec = random::low_rank_psd_spec(rng, d, r);
        const auto ev = oracle::eigenvalues(support::dense(spec));
        const auto ms = oracle::eigenvalues(support::dense(spec.m));
        const double a_norm = norm2(spec.a);
        const double lb = smallest_nonzero_lower(ms[r - 1], spec.c, a_norm, r);
        const auto cor = smallest_nonzero_corollaries(ms[r - 1], spec.c, a_norm);
        const double tol = 1e-9 * (1 + ev.front());
        EXPECT_LE(lb, ev[r] + tol);
        EXPECT_LE(cor.weyl, lb + tol);
        if (cor.mathias) EXPECT_LE(*cor.mathias, lb + tol);
    }
}

TEST(OpNorm, Examples) {
    const auto b = opnorm_bounds(1.0, 0.0, 0.1, 1.0);
    EXPECT_DOUBLE_EQ(b.b1, 1.1);
    EXPECT_NEAR(*b.b2, 1.01, 1e-15);
    EXPECT_NEAR(b.b3, 1.01, 1e-15);
    EXPECT_FALSE(opnorm_bounds(1.0, 2.0, 0.1, 1.0).b2.has_value());
    EXPECT_THROW(opnorm_bounds(0.0, 1.0, 0.1, 0.0), InputError);
}

TEST(OpNorm, GramSpecsAgainstOracle) {
    SplitMix64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = 2 + rng.below(6);
        const BorderedSpec spec = random::gram_spec(rng, d, d + 1 + rng.below(4));
        const auto ms = oracle::eigenvalues(support::dense(spec.m));
        const double m_norm = std::max(std::abs(ms.front()), std::abs(ms.back()));
        const auto b = opnorm_bounds(m_norm, spec.c, norm2(spec.a), ms.front());
        const double nrm = oracle::spectral_norm(support::dense(spec));
        const double tol = 1e-9 * (1 + nrm);
        EXPECT_GE(b.b1, nrm - tol);
        if (b.b2) EXPECT_GE(*b.b2, nrm - tol);
        EXPECT_GE(b.b3, nrm - tol);
    }
}

TEST(OpNorm, ThirdBoundHoldsForIndefiniteM) {
    SplitMix64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const BorderedSpec spec = random::gaussian_spec(rng, 2 + rng.below(6));
        const auto ms = oracle::eigenvalues(support::dense(spec.m));
        const double m_norm = std::max(std::abs(ms.front()), std::abs(ms.back()));
        const auto b = opnorm_bounds(m_norm, spec.c, norm2(spec.a), ms.front());
        const double nrm = oracle::spectral_norm(support::dense(spec));
        EXPECT_GE(b.b3, nrm - 1e-9 * (1 + nrm));
    }
}

TEST(OpNorm, FirstBoundFailsForIndefiniteM) {
    // M = [-1], c = -1, a = [1]: ||A|| = 2 while b1 = max(c, ||M||) + ||a|| = 2 holds
    // with equality and b2 = ||M|| + ||a||^2 / (||M|| - c) = 1.5 does not.
    const auto b = opnorm_bounds(1.0, -1.0, 1.0, -1.0);
    EXPECT_DOUBLE_EQ(b.b1, 2.0);
    EXPECT_DOUBLE_EQ(*b.b2, 1.5);
    EXPECT_NEAR(oracle::spectral_norm({{-1, 1}, {1, -1}}), 2.0, 1e-14);
}

TEST(IpsenNadler, ZeroGap) {
    IpsenNadlerInputs in{2.0, 2.0, 3.0, 1.2, 0.5, 1.0};
    const auto r = ipsen_nadler(in);
    EXPECT_NEAR(*r.upper - 2.0, 3.0, 1e-12);
    EXPECT_NEAR(*r.lower - 2.0, 1.2, 1e-12);
}

TEST(IpsenNadler, ZeroVector) {
    const auto r = ipsen_nadler({2.0, 1.0, 0.0, 0.0, 0.0, 0.0});
    EXPECT_DOUBLE_EQ(*r.lower, 2.0);
    EXPECT_DOUBLE_EQ(*r.upper, 2.0);
}

TEST(IpsenNadler, RandomAgainstOracle) {
    SplitMix64 rng(47);
    for (int t = 0; t < 200; ++t) {
        const SymmetricMatrix m = random::gaussian_symmetric(rng, 5);
        const Vector x = random::gaussian_vector(rng, 5);
        const auto r = ipsen_nadler(IpsenNadlerInputs::from(m, x));
        const double exact = oracle::largest(support::dense(rank_one_update(m, x)));
        const double tol = 1e-9 * (1 + std::abs(exact));
        EXPECT_LE(*r.lower, exact + tol);
        EXPECT_GE(*r.upper, exact - tol);
    }
}

TEST(Literature, Examples) {
    EXPECT_DOUBLE_EQ(lili_literature_form(1.0, 1.0, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(lili_literature_form(1.0, 3.0, 0.0), 0.0);
    SplitMix64 rng(53);
    for (int t = 0; t < 100; ++t) {
        const BorderedSpec spec = random::gaussian_spec(rng, 4);
        const auto in = LiLiInputs::from_spec(spec);
        const double exact = oracle::largest(support::dense(spec));
        EXPECT_LE(std::abs(exact - std::max(in.c, in.lambda1)),
                  lili_literature_form(in.lambda1, in.c, in.a_norm) + 1e-9 * (1 + std::abs(exact)));
    }
}

TEST(Analyze, BorderedIdentityReport) {
    const BorderedSpec spec{SymmetricMatrix::identity(3), {0.3, 0.4, 0.0}, 1.0};
    const auto a = analyze_spec(spec);
    const auto* lili = find(a.reports, "lili_two_sided");
    ASSERT_NE(lili, nullptr);
    EXPECT_NEAR(*lili->exact, 1.5, 1e-12);
    EXPECT_DOUBLE_EQ(*lili->lower, 1.5);
    EXPECT_DOUBLE_EQ(*lili->upper, 1.5);
    EXPECT_EQ(find(a.reports, "mathias_arrowhead"), nullptr);
    ASSERT_NE(find(a.reports, "smallest_nonzero"), nullptr);
    EXPECT_NEAR(*find(a.reports, "smallest_nonzero")->exact, 0.5, 1e-12);
}

TEST(Analyze, ZeroBorderHasNoCorrections) {
    const BorderedSpec spec{SymmetricMatrix::diagonal(Vector{2.0, 1.0}), {0.0, 0.0}, 0.5};
    const auto a = analyze_spec(spec);
    const auto* lili = find(a.reports, "lili_two_sided");
    EXPECT_DOUBLE_EQ(*lili->lower, 2.0);
    EXPECT_DOUBLE_EQ(*lili->upper, 2.0);
    EXPECT_DOUBLE_EQ(*find(a.reports, "weyl_arrowhead")->upper, 2.0);
    EXPECT_DOUBLE_EQ(*find(a.reports, "mathias_arrowhead")->upper, 2.0);
}

TEST(Report, HoldsAndSlacks) {
    BoundReport r;
    r.lower = 1.0;
    r.upper = 2.0;
    r.with_exact(1.5);
    EXPECT_DOUBLE_EQ(*r.slack_lower, 0.5);
    EXPECT_DOUBLE_EQ(*r.slack_upper, 0.5);
    EXPECT_TRUE(r.holds(0.0));
    r.with_exact(2.1);
    EXPECT_FALSE(r.holds(0.05));
}
