#pragma once

#include <cstdint>
#include <string>

#include "pcm/matrix.hpp"
#include "pcm/rng.hpp"

namespace pcm {

// Random matrix schemes. Every generator is a pure function of (seed, arguments): the
// seed-taking overloads derive a private stream tagged with the scheme's purpose id and
// the order n, so different schemes started from one seed never share draws.

enum class Scheme { saaty_uniform, consistent_perturbed, unit_interval_ratio, ishizaka_lusti };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

// Upper-triangle entries drawn independently and uniformly from the 17-value judgment
// scale; exact rational output.
Pcm saaty_uniform(int n, rng::Stream& stream);
Pcm saaty_uniform(int n, std::uint64_t seed);

// Consistent ratios of U[1,9] weights, then for each pair the entry that is >= 1 gets
// additive noise e ~ U[-delta, delta]: a+e when that stays >= 1, otherwise the value
// wraps below one as 1/(1 - e - (a-1)). Noise that would push the wrapped value to or
// below zero is redrawn for that pair.
Pcm consistent_perturbed(int n, double delta, rng::Stream& stream);
Pcm consistent_perturbed(int n, double delta, std::uint64_t seed);

// a_ij = c_ij / c_ji with independent U(0,1) draws per ordered pair (zeros resampled).
Pcm unit_interval_ratio(int n, rng::Stream& stream);
Pcm unit_interval_ratio(int n, std::uint64_t seed);

struct IshizakaDraw {
    Pcm matrix;
    double lambda_max = 0.0;
    double cr = 0.0;
    // 1-based inconsistency group: group k collects CR in [0.02(k-1), 0.02k).
    int group = 0;
    bool dismissed = false;
};

// Consistent matrix from random superdiagonal scale entries, then a random number of
// scale-position perturbations (each at most four positions, truncated at the scale
// ends, each candidate position at probability 1/9). Draws with CR >= 0.1 come back
// dismissed. ri_n is the random-index denominator for the CR computation.
IshizakaDraw ishizaka_lusti(int n, rng::Stream& stream, double ri_n);
IshizakaDraw ishizaka_lusti(int n, std::uint64_t seed, double ri_n);

// Copy of A with a_ij bumped to the next larger scale value (9 steps to 10) and a_ji
// updated reciprocally. Requires i < j and a value on the scale or equal to 10; the
// 10 itself has no successor.
Pcm next_scale_step(const Pcm& a, int i, int j);

}  // namespace pcm
