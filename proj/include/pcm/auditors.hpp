#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pcm/matrix.hpp"
#include "pcm/weighting.hpp"

namespace pcm {

// The five property audits. Each returns a typed report carrying the verdict together
// with enough evidence to re-check it from the raw definitions; the command line turns
// these into JSON.

enum class Property { asymmetry, group_coherence, scale_invariance, monotonicity, efficiency };
enum class Verdict { satisfied, violated, inconclusive };

const char* property_name(Property p);
const char* verdict_name(Verdict v);
Property property_from_name(const std::string& name);

// Right eigenvector against inverse-left weights: four distance metrics, the list of
// strictly opposed pairs, and the reversal flags. The verdict is violated whenever the
// two tie-aware rankings differ at all, so a flipped tie counts even without a strictly
// opposed pair. transpose_inversion_holds records whether the transpose's ranking is the
// exact reverse of the original ranking.
struct AsymmetryReport {
    Verdict verdict = Verdict::satisfied;
    double lambda_max = 0.0;
    WeightVector right;
    WeightVector inverse_left;
    Ranking right_ranking;
    Ranking inverse_left_ranking;
    double euclidean_distance = 0.0;
    double chebyshev_distance = 0.0;
    double max_weight_ratio = 1.0;
    double tau = 1.0;
    std::vector<std::pair<int, int>> reversed_pairs;
    bool any_reversal = false;
    bool top_reversal = false;
    bool full_reversal = false;
    bool transpose_inversion_holds = true;
};

AsymmetryReport audit_asymmetry(const Pcm& a, double tol = kEigenTol, double tie_tol = 1e-9);

// Weigh-then-aggregate versus aggregate-then-weigh, both using the entrywise (weighted)
// geometric mean as the aggregator. Violated when the two paths elect different top
// tie-classes. Empty group_weights means equal weights.
struct GroupCoherenceReport {
    Verdict verdict = Verdict::satisfied;
    WeightVector weigh_then_aggregate;
    WeightVector aggregate_then_weigh;
    Ranking path1_ranking;
    Ranking path2_ranking;
    std::vector<Ranking> individual_rankings;
    std::vector<int> path1_top;
    std::vector<int> path2_top;
    std::optional<Pcm> aggregate;
};

GroupCoherenceReport audit_group_coherence(const std::vector<Pcm>& group, Method method,
                                           const std::vector<double>& group_weights = {},
                                           double tie_tol = 1e-9);

// One ranking change located between two grid points, refined by bisection until the
// bracket is narrower than 1e-3.
struct ScaleBreak {
    double alpha_low = 0.0;
    double alpha_high = 0.0;
    Ranking low_ranking;
    Ranking high_ranking;
};

struct ScaleInvarianceReport {
    Verdict verdict = Verdict::satisfied;
    std::vector<double> grid;
    std::vector<std::optional<Ranking>> rankings;  // empty entry: no convergence there
    std::vector<ScaleBreak> breaks;
    std::vector<double> failed_alphas;
};

ScaleInvarianceReport audit_scale_invariance(const Pcm& a, const std::vector<double>& alpha_grid,
                                             Method method, double tie_tol = 1e-9);

// A single increase of one entry, either to the next scale value or by a factor > 1.
struct Step {
    static Step scale() { return Step{true, 0.0}; }
    static Step multiply(double factor) { return Step{false, factor}; }

    bool to_next_scale_value = true;
    double factor = 0.0;
};

struct MonotonicityReport {
    Verdict verdict = Verdict::satisfied;
    bool rank_violated = false;
    bool weight_violated = false;
    WeightVector before;
    WeightVector after;
    Ranking before_ranking;
    Ranking after_ranking;
    // Alternatives that alternative i was weakly ahead of and fell strictly behind.
    std::vector<int> overtaken_by;
    double weight_before = 0.0;  // normalized weight of alternative i before the step
    double weight_after = 0.0;
    std::optional<Pcm> stepped;
};

MonotonicityReport audit_monotonicity(const Pcm& a, int i, int j, Step step, Method method,
                                      double tie_tol = 1e-9, double weight_tol = 1e-10);

// Witness that `dominator` approximates every entry at least as well as `dominated` and
// at least one entry strictly better.
struct DominanceCertificate {
    WeightVector dominated;
    WeightVector dominator;
    std::vector<std::pair<int, int>> weak_pairs;    // every ordered pair off the diagonal
    std::vector<std::pair<int, int>> strict_pairs;  // nonempty
};

// i = j = -1 means the candidate matched everywhere but improved nowhere; otherwise
// (i, j) is the first ordered pair whose residual got worse.
struct NotDominating {
    int i = -1;
    int j = -1;
};

using DominanceOutcome = std::variant<DominanceCertificate, NotDominating>;

DominanceOutcome check_dominance(const Pcm& a, const WeightVector& w,
                                 const WeightVector& candidate, double weak_slack = 1e-12,
                                 double strict_margin = 1e-9);

// Efficiency via the dominance digraph: arc i -> j whenever w_i/w_j >= a_ij (up to
// arc_tol relative slack); w is efficient iff the graph is strongly connected. An
// inefficiency verdict always carries a certificate that re-verifies under
// check_dominance; certificates are built by scaling one coordinate or one source
// component, with a seeded randomized search as the last resort. If no candidate
// survives verification the vector counts as efficient, since improvements below the
// strict margin are not treated as dominance.
struct EfficiencyReport {
    Verdict verdict = Verdict::satisfied;
    bool efficient = true;
    bool strongly_connected = true;  // the raw digraph criterion
    std::optional<DominanceCertificate> certificate;
};

EfficiencyReport test_efficiency(const Pcm& a, const WeightVector& w, double arc_tol = 1e-12,
                                 std::uint64_t search_seed = 1);

EfficiencyReport audit_efficiency(const Pcm& a, Method method, double tol = kEigenTol,
                                  int max_iter = kEigenMaxIter);

}  // namespace pcm
