#pragma once

#include "pcm/weighting.hpp"

namespace pcm {

// Vector metrics require equal length and the same declared normalization; comparing a
// sum1 vector against a sum100 vector is a unit error, not a distance.
double euclidean(const WeightVector& w1, const WeightVector& w2);
double chebyshev(const WeightVector& w1, const WeightVector& w2);

// max over alternatives of max(w1_i/w2_i, w2_i/w1_i); equals 1 iff the vectors agree.
double max_ratio(const WeightVector& w1, const WeightVector& w2);

// Tie-corrected rank correlation (tau-b): (C - D) / sqrt((n0 - t1)(n0 - t2)) over all
// alternative pairs. Degenerate inputs: both rankings one big tie -> 1, exactly one
// fully tied -> 0 (no ordinal information to correlate).
double kendall_tau(const Ranking& r1, const Ranking& r2);

}  // namespace pcm
