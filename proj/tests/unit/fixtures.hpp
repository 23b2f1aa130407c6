#pragma once

// Shared fixture matrices used across the unit and acceptance suites, plus
// reference values computed with an independent high-precision implementation
// and frozen here. Tests compare against these constants rather than against
// values produced by the library itself.

#include <vector>

#include "pcm/matrix.hpp"
#include "pcm/rational.hpp"

namespace fixtures {

using pcm::Pcm;
using pcm::Rational;

inline Rational R(long long num, long long den = 1) { return Rational(num, den); }

// 4x4 judgment matrix whose right and inverse left eigenvectors swap the
// first and fourth alternatives. Heavily inconsistent (CR about 0.33).
inline Pcm rank_reversal_4x4() {
    return pcm::validate({{R(1), R(3), R(1, 3), R(1, 2)},
                          {R(1, 3), R(1), R(1, 6), R(2)},
                          {R(3), R(6), R(1), R(1)},
                          {R(2), R(1, 2), R(1), R(1)}});
}

// 5x5 matrix with acceptable inconsistency where the two eigenvectors still
// disagree about the best alternative (1 versus 2).
inline Pcm top_flip_5x5() {
    return pcm::validate({{R(1), R(1), R(3), R(9), R(9)},
                          {R(1), R(1), R(5), R(8), R(5)},
                          {R(1, 3), R(1, 5), R(1), R(9), R(5)},
                          {R(1, 9), R(1, 8), R(1, 9), R(1), R(1)},
                          {R(1, 9), R(1, 5), R(1, 5), R(1), R(1)}});
}

// 4x4 matrix with rational entries whose right eigenvector is exactly
// (2/9, 5/18, 4/9, 1/18) and whose left eigenvector is proportional to
// (1/4, 1/5, 1/8, 1).
inline Pcm exact_fraction_4x4() {
    return pcm::validate({{R(1), R(8, 5), R(1, 4), R(4)},
                          {R(5, 8), R(1), R(5, 8), R(10)},
                          {R(4), R(8, 5), R(1), R(4)},
                          {R(1, 4), R(1, 10), R(1, 4), R(1)}});
}

// Near-consistent 4x4 matrix (CR about 0.0007) that still reverses the
// ranks of alternatives 1 and 3 between the two eigenvectors. Entries are
// printed to four decimals, so reciprocity only holds loosely.
inline Pcm near_consistent_reversal() {
    return pcm::validate({{1, 0.4759, 0.9832, 0.4025},
                          {2.1011, 1, 1.9975, 0.7374},
                          {1.0171, 0.5006, 1, 0.3704},
                          {2.4842, 1.3560, 2.6998, 1}},
                         5e-3);
}

// 5x5 matrix where the inverse left eigenvector ranks the alternatives in
// exactly the opposite order of the right eigenvector.
inline Pcm full_reversal_5x5() {
    return pcm::validate({{1, 1.624, 0.574, 1.072, 1.054},
                          {0.616, 1, 1.132, 1.089, 1.269},
                          {1.743, 0.884, 1, 1.515, 0.467},
                          {0.933, 0.919, 0.660, 1, 1.694},
                          {0.949, 0.788, 2.140, 0.590, 1}},
                         5e-3);
}

// 5x5 matrix with CR below 0.1 whose top alternative differs between the
// right (5) and inverse left (2) eigenvectors.
inline Pcm sub_threshold_reversal() {
    return pcm::validate({{1, 0.371, 2.013, 5.389, 0.243},
                          {2.698, 1, 4.596, 7.527, 0.736},
                          {0.497, 0.218, 1, 2.321, 0.167},
                          {0.186, 0.133, 0.431, 1, 0.385},
                          {4.120, 1.359, 5.973, 2.598, 1}},
                         5e-3);
}

// Two voters whose individual matrices both put alternative 1 on top, while
// the geometric-mean aggregate of the matrices puts alternative 2 on top.
inline Pcm coherence_pair_a() {
    return pcm::validate({{R(1), R(1), R(2), R(1), R(1)},
                          {R(1), R(1), R(1), R(2), R(1)},
                          {R(1, 2), R(1), R(1), R(1), R(2)},
                          {R(1), R(1, 2), R(1), R(1), R(1)},
                          {R(1), R(1), R(1, 2), R(1), R(1)}});
}

inline Pcm coherence_pair_b() {
    return pcm::validate({{R(1), R(1), R(1), R(1), R(2)},
                          {R(1), R(1), R(1), R(2), R(1)},
                          {R(1), R(1), R(1), R(1), R(1, 2)},
                          {R(1), R(1, 2), R(1), R(1), R(1)},
                          {R(1, 2), R(1), R(2), R(1), R(1)}});
}

// Round-robin tournament with wins p, losses 1/p, and five intransitive
// triads. Players 2, 5, and 6 always share a weight; player 4 overtakes
// them once p exceeds a threshold near 3.4.
inline Pcm tournament_6(double p) {
    double q = 1 / p;
    return pcm::validate({{1, p, p, q, p, p},
                          {q, 1, q, p, p, q},
                          {q, p, 1, p, p, p},
                          {p, q, q, 1, q, q},
                          {q, q, q, p, 1, p},
                          {q, p, q, p, q, 1}});
}

// Seven-alternative win/loss family. The right eigenvector resolves all
// geometric-mean ties at p = 2 but produces three pairwise rank reversals
// at p = 4.
inline Pcm intensity_family_7(double p) {
    double q = 1 / p;
    return pcm::validate({{1, q, p, p, p, p, p},
                          {p, 1, p, p, q, p, q},
                          {q, q, 1, p, p, p, p},
                          {q, q, q, 1, p, p, p},
                          {q, p, q, q, 1, q, p},
                          {q, q, q, q, p, 1, p},
                          {q, p, q, q, q, q, 1}});
}

// Six-alternative matrix parameterised by its (1,2) entry. Raising beta
// from 0.3 to 0.5 demotes alternative 1 below alternative 5, and the
// normalised weight of alternative 1 has a local minimum near beta = 0.46.
inline Pcm drift_family_6(double beta) {
    return pcm::validate({{1, beta, 8, 1.0 / 9, 1.0 / 4, 1.0 / 9},
                          {1 / beta, 1, 1.0 / 5, 1.0 / 9, 1, 1.0 / 4},
                          {1.0 / 8, 5, 1, 1.0 / 8, 1.0 / 2, 1.0 / 7},
                          {9, 9, 8, 1, 7, 8},
                          {4, 1, 2, 1.0 / 7, 1, 1.0 / 9},
                          {9, 4, 7, 1.0 / 8, 9, 1}});
}

// 4x4 matrix whose right eigenvector is dominated by a vector that scales
// up the first coordinate; the geometric-mean weights are efficient.
inline Pcm inefficient_em_4x4() {
    return pcm::validate({{R(1), R(2), R(4), R(7)},
                          {R(1, 2), R(1), R(3), R(2)},
                          {R(1, 4), R(1, 3), R(1), R(3)},
                          {R(1, 7), R(1, 2), R(1, 3), R(1)}});
}

// One strong alternative dominating everything at ratio p, with a cycle of
// strength q through the rest. The right eigenvector is inefficient for
// every q > 1, while the inconsistency vanishes as q approaches 1.
inline Pcm block_family(int n, double p, double q) {
    std::vector<std::vector<double>> grid(n, std::vector<double>(n, 1.0));
    for (int j = 1; j < n; ++j) {
        grid[0][j] = p;
        grid[j][0] = 1 / p;
    }
    for (int k = 1; k < n; ++k) {
        int next = 1 + (k % (n - 1));
        grid[k][next] = q;
        grid[next][k] = 1 / q;
    }
    return pcm::validate(grid);
}

// Reference values from an independent 50-digit implementation.
inline namespace frozen {

inline constexpr double kRankReversalLambda = 4.876538031361223;
inline constexpr double kRankReversalRight[4] = {0.184388959094555873, 0.151888829088777276,
                                                 0.436420684089063111, 0.22730152772760374};
inline constexpr double kRankReversalInverseLeft[4] = {0.201425520159761436, 0.128912850080598069,
                                                       0.476743638734028254, 0.192917991025612241};
inline constexpr double kRankReversalEuclidean = 0.0602188366854581654;
inline constexpr double kRankReversalChebyshev = 0.0403229546449651432;
inline constexpr double kRankReversalMaxRatio = 1.17822877233584016;
inline constexpr double kRankReversalGm[4] = {0.18778334491286533, 0.12892998800816594,
                                              0.4599733772295793, 0.2233132898493895};

inline constexpr double kExactFractionLambda = 4.5;
inline constexpr double kExactFractionRight[4] = {2.0 / 9, 5.0 / 18, 4.0 / 9, 1.0 / 18};
inline constexpr double kExactFractionLeft[4] = {0.25 / 1.575, 0.2 / 1.575, 0.125 / 1.575,
                                                 1.0 / 1.575};

inline constexpr double kIntensityLambdaP2 = 8.0733496915;
inline constexpr double kIntensityLambdaP4 = 12.2523419114;

inline constexpr double kTournamentFlip = 3.4003202535189465;

inline constexpr double kInefficientScale = 1.0216402904821837;
inline constexpr double kInefficientScaledFirst = 52.674939568614654;

// Monte Carlo random indices for n = 3..9 from an independent sampler at
// 200000 trials, with their standard errors. Estimates from this library
// must land within a few combined standard errors.
inline constexpr double kRiMean[7] = {0.52733, 0.88385, 1.10915, 1.24891,
                                      1.34018, 1.40403, 1.45059};
inline constexpr double kRiStderr[7] = {0.00156, 0.00140, 0.00114, 0.00091,
                                        0.00074, 0.00062, 0.00053};

}  // namespace frozen

}  // namespace fixtures
