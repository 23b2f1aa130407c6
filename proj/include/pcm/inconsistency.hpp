#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "pcm/matrix.hpp"
#include "pcm/weighting.hpp"

namespace pcm {

// (lambda_max - n)/(n - 1), clamped to 0 when within eigen tolerance. Any 2x2 reciprocal
// matrix is consistent, so n = 2 returns exact 0 instead of failing.
double consistency_index(const Pcm& a, double tol = kEigenTol, int max_iter = kEigenMaxIter);

struct RiEstimate {
    int n = 0;
    double ri = 0.0;
    double stderr_ = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// Mean CI over seeded saaty_uniform matrices. Trials run in parallel, each on its own
// derived stream; the reduction is a fixed-shape pairwise sum over the trial-indexed
// buffer, so the result is bit-identical for any thread count.
RiEstimate estimate_random_index(int n, std::uint64_t trials, std::uint64_t seed,
                                 int threads = 0);

// Frozen defaults for the cached table; changing either invalidates all pinned CR values.
inline constexpr std::uint64_t kRiDefaultSeed = 20240817;
inline constexpr std::uint64_t kRiDefaultTrials = 1000000;

// $PCM_RI_CACHE if set, else ./.pcm-ri-cache
std::string default_ri_cache_dir();

// Cache file layout: {"n", "ri", "trials", "seed", "stderr"} with the seed as a string.
RiEstimate read_ri_cache_file(const std::string& path);
void write_ri_cache_file(const RiEstimate& e, const std::string& path);
std::string ri_cache_file_name(int n, std::uint64_t trials, std::uint64_t seed);

// Source of RI values: either lazily estimated (and disk-cached) at fixed (trials, seed),
// or a user-supplied table. Shared by audits, reports, and the CLI.
class RiTable {
public:
    static RiTable estimated(std::uint64_t trials = kRiDefaultTrials,
                             std::uint64_t seed = kRiDefaultSeed,
                             std::string cache_dir = default_ri_cache_dir());
    static RiTable user(std::map<int, double> values);

    double ri_for(int n) const;
    RiEstimate estimate_for(int n) const;  // estimated tables only
    bool is_estimated() const { return estimated_; }
    std::uint64_t trials() const { return trials_; }
    std::uint64_t seed() const { return seed_; }

private:
    RiTable() = default;
    bool estimated_ = false;
    std::uint64_t trials_ = 0;
    std::uint64_t seed_ = 0;
    std::string cache_dir_;
    std::map<int, double> user_values_;
    // Lazy per-order memo; shared_ptr keeps the table copyable across audit batches.
    std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
    std::shared_ptr<std::map<int, RiEstimate>> memo_ =
        std::make_shared<std::map<int, RiEstimate>>();
};

struct InconsistencyReport {
    double lambda_max = 0.0;
    double ci = 0.0;
    double ri = 0.0;
    double cr = 0.0;
    bool acceptable = false;  // cr < 0.1
    bool ri_estimated = false;
    std::uint64_t ri_trials = 0;  // meaningful when ri_estimated
    std::uint64_t ri_seed = 0;
};

InconsistencyReport consistency_ratio(const Pcm& a, const RiTable& table,
                                      double tol = kEigenTol, int max_iter = kEigenMaxIter);

}  // namespace pcm
