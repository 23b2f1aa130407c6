#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pcm/generators.hpp"
#include "pcm/inconsistency.hpp"
#include "pcm/weighting.hpp"

namespace pcm {

// Seeded Monte Carlo studies over the generator schemes. A study draws one matrix per
// trial from its own derived stream, runs the per-trial measurements, and bins the
// results by consistency ratio. Identical specs produce identical CSV bytes.

enum class Study { asymmetry, monotonicity };

const char* study_name(Study s);
Study study_from_name(const std::string& name);

struct ExperimentSpec {
    Scheme scheme = Scheme::saaty_uniform;
    Study study = Study::asymmetry;
    int n = 5;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double cr_bin_width = 0.01;
    double delta = 1.0;  // noise half-width, consistent_perturbed only
    Method method = Method::em;
    int threads = 1;

    void check() const;
};

ExperimentSpec experiment_from_json(const std::string& text);
std::string experiment_to_json(const ExperimentSpec& spec);

enum class TrialStatus { ok, dismissed, no_convergence };

struct AsymmetryTrial {
    std::uint64_t trial = 0;
    TrialStatus status = TrialStatus::ok;
    double cr = 0.0;
    int group = 0;  // ishizaka_lusti draws only, otherwise 0
    bool any_reversal = false;
    bool top_reversal = false;
    bool full_reversal = false;
    double tau = 1.0;
    double euclidean_distance = 0.0;
    double chebyshev_distance = 0.0;
    double max_weight_ratio = 1.0;
};

struct MonotonicityTrial {
    std::uint64_t trial = 0;
    TrialStatus status = TrialStatus::ok;
    double cr = 0.0;
    int steps = 0;
    int rank_violations = 0;
    int weight_violations = 0;
};

struct SimulationResult {
    ExperimentSpec spec;
    double ri = 0.0;  // denominator used for every trial's CR
    std::vector<AsymmetryTrial> asymmetry_trials;
    std::vector<MonotonicityTrial> monotonicity_trials;
};

SimulationResult run_experiment(const ExperimentSpec& spec, const RiTable& ri);

// One row per trial in trial order.
void write_trials_csv(const SimulationResult& result, std::ostream& out);

// Contiguous CR bins from 0 through the last occupied one; dismissed and unconverged
// trials are excluded from binning.
void write_summary_csv(const SimulationResult& result, std::ostream& out);

}  // namespace pcm
