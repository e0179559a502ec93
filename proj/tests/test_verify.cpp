#include <gtest/gtest.h>

#include <filesystem>

#include "spectral_perturb/io.hpp"
#include "spectral_perturb/report.hpp"
#include "spectral_perturb/verify.hpp"

using namespace spectral_perturb;

TEST(Verify, CleanRun) {
    verify::Options o;
    o.seed = 1;
    o.trials = 100;
    const auto s = verify::run(o);
    EXPECT_TRUE(s.ok());
    EXPECT_GT(s.total_checks(), 100U * 20U);
    EXPECT_TRUE(s.failures.empty());
}

TEST(Verify, ZeroTrialsIsVacuous) {
    verify::Options o;
    o.trials = 0;
    const auto s = verify::run(o);
    EXPECT_TRUE(s.ok());
    EXPECT_EQ(s.total_checks(), 0U);
}

TEST(Verify, InjectedFaultIsCaughtWithInstance) {
    verify::Options o;
    o.trials = 20;
    o.inject_fault = true;
    const auto s = verify::run(o);
    ASSERT_FALSE(s.ok());
    ASSERT_FALSE(s.failures.empty());
    EXPECT_EQ(s.failures.front().invariant, "lili_two_sided");
    // the dumped instance replays to the same spec
    const BorderedSpec replay = report::spec_from_json(s.failures.front().instance);
    const BorderedSpec orig = verify::trial_spec(o, s.failures.front().trial);
    EXPECT_EQ(replay.m, orig.m);
    EXPECT_EQ(replay.a, orig.a);
}

TEST(Verify, RejectsBadOptions) {
    verify::Options o;
    o.dim = 1;
    EXPECT_THROW(verify::run(o), InputError);
}

TEST(Verify, EmittedFixturesReload) {
    const auto dir = std::filesystem::temp_directory_path() / "spectral_perturb_fixtures_test";
    std::filesystem::remove_all(dir);
    verify::Options o;
    verify::emit_fixtures(o, 2, dir.string());
    const BorderedSpec spec = verify::trial_spec(o, 1);
    EXPECT_EQ(io::read_matrix((dir / "instance_1_M.csv").string()), spec.m.as_matrix());
    EXPECT_EQ(io::read_vector((dir / "instance_1_a.csv").string()), spec.a);
    std::filesystem::remove_all(dir);
}
