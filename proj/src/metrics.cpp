#include "pcm/metrics.hpp"

#include <cmath>

namespace pcm {

namespace {

void check_pair(const WeightVector& w1, const WeightVector& w2) {
    if (w1.n() != w2.n()) {
        throw Error(errc::length_mismatch, "vectors have lengths " + std::to_string(w1.n()) +
                                               " and " + std::to_string(w2.n()));
    }
    if (w1.norm != w2.norm) {
        throw Error(errc::normalization_mismatch,
                    std::string("vectors are normalized ") + norm_name(w1.norm) + " vs " +
                        norm_name(w2.norm));
    }
}

}  // namespace

double euclidean(const WeightVector& w1, const WeightVector& w2) {
    check_pair(w1, w2);
    double acc = 0.0;
    for (int i = 0; i < w1.n(); ++i) {
        double d = w1[i] - w2[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double chebyshev(const WeightVector& w1, const WeightVector& w2) {
    check_pair(w1, w2);
    double best = 0.0;
    for (int i = 0; i < w1.n(); ++i) best = std::max(best, std::fabs(w1[i] - w2[i]));
    return best;
}

double max_ratio(const WeightVector& w1, const WeightVector& w2) {
    check_pair(w1, w2);
    double best = 1.0;
    for (int i = 0; i < w1.n(); ++i) {
        double r = w1[i] / w2[i];
        best = std::max(best, std::max(r, 1.0 / r));
    }
    return best;
}

double kendall_tau(const Ranking& r1, const Ranking& r2) {
    int n = r1.n();
    if (n != r2.n()) {
        throw Error(errc::size_mismatch, "rankings cover " + std::to_string(n) + " and " +
                                             std::to_string(r2.n()) + " alternatives");
    }
    std::vector<int> x(n), y(n);
    for (int i = 0; i < n; ++i) {
        x[static_cast<size_t>(i)] = r1.class_of(i);
        y[static_cast<size_t>(i)] = r2.class_of(i);
    }
    long long concordant = 0, discordant = 0, tied_x = 0, tied_y = 0;
    long long pairs = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ++pairs;
            int u = (x[i] < x[j]) - (x[i] > x[j]);
            int v = (y[i] < y[j]) - (y[i] > y[j]);
            if (u == 0 && v == 0) {
                ++tied_x;
                ++tied_y;
            } else if (u == 0) {
                ++tied_x;
            } else if (v == 0) {
                ++tied_y;
            } else if (u == v) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    long long denom_x = pairs - tied_x;
    long long denom_y = pairs - tied_y;
    if (denom_x == 0 && denom_y == 0) return 1.0;
    if (denom_x == 0 || denom_y == 0) return 0.0;
    return static_cast<double>(concordant - discordant) /
           std::sqrt(static_cast<double>(denom_x) * static_cast<double>(denom_y));
}

}  // namespace pcm
