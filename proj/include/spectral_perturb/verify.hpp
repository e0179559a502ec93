#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectral_perturb/linalg.hpp"

namespace spectral_perturb::verify {

struct Options {
    std::uint64_t seed = 42;
    std::size_t trials = 200;
    std::size_t dim = 6;
    double tol = 1e-9;          // relative to 1 + the scale of each instance
    bool inject_fault = false;  // halve the Li-Li upper correction before checking
    std::size_t max_failures = 10;
};

struct Tally {
    std::string invariant;
    std::size_t checked = 0;
    std::size_t violated = 0;
};

struct Failure {
    std::string invariant;
    std::size_t trial = 0;
    std::string detail;
    nlohmann::ordered_json instance;
};

struct Summary {
    std::vector<Tally> tallies;     // in first-checked order
    std::vector<Failure> failures;  // at most Options::max_failures
    std::size_t trials = 0;

    std::size_t total_checks() const;
    std::size_t total_violations() const;
    bool ok() const { return total_violations() == 0; }
};

/// Runs the invariant battery on `trials` random instances. Trial k draws from
/// SplitMix64::substream(seed, k). Each trial covers one Gaussian bordered
/// matrix (cycling through generic, a orthogonal to V1, c = lambda_1(M) and a
/// repeated top eigenvalue), one Gram-type bordered matrix, one bordered
/// matrix with low-rank positive semidefinite M, one random graph and one
/// pinning instance.
Summary run(const Options& opts);

nlohmann::ordered_json to_json(const Summary& s);

/// The Gaussian bordered instance of trial k, as used by run().
BorderedSpec trial_spec(const Options& opts, std::size_t k);

/// Writes `count` instances into `dir` as instance_<k>.json plus
/// instance_<k>_M.csv and instance_<k>_a.csv, with the bound report of each in
/// instance_<k>_report.json. Creates `dir` if needed.
void emit_fixtures(const Options& opts, std::size_t count, const std::string& dir);

}  // namespace spectral_perturb::verify
