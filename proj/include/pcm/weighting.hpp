#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcm/matrix.hpp"

namespace pcm {

enum class Norm { sum1, sum100, none };

const char* norm_name(Norm n);

struct WeightVector {
    std::vector<double> w;
    Norm norm = Norm::sum1;

    int n() const { return static_cast<int>(w.size()); }
    double operator[](int i) const { return w[static_cast<size_t>(i)]; }
};

// Rescales to the target normalization (none leaves the vector untouched).
WeightVector normalized(const WeightVector& v, Norm target);

struct EigenResult {
    double lambda_max = 0.0;
    WeightVector right;
    // Filled only by solves that were asked for the transpose side; the plain right solve
    // leaves it empty rather than paying for a second iteration.
    std::optional<WeightVector> left;
    int iterations = 0;
    double residual = 0.0;  // |A*w - lambda*w|_inf / |w|_inf at the returned iterate
};

inline constexpr double kEigenTol = 1e-12;
inline constexpr int kEigenMaxIter = 100000;

// Power iteration with per-step sum normalization from the all-ones start; converges on
// successive-iterate distance and verifies the residual bound before returning.
// Throws NoConvergence (with the best iterate attached) if max_iter runs out.
EigenResult right_eigenvector(const Pcm& a, double tol = kEigenTol, int max_iter = kEigenMaxIter);

// Right eigenvector of the transpose, reported as the left vector (sum-normalized).
WeightVector left_eigenvector(const Pcm& a, double tol = kEigenTol, int max_iter = kEigenMaxIter);

// Entrywise reciprocal of the left eigenvector, renormalized.
WeightVector inverse_left_weights(const Pcm& a, double tol = kEigenTol,
                                  int max_iter = kEigenMaxIter);

// w_i proportional to (prod_j a_ij)^(1/n); closed form, no iteration.
WeightVector geometric_mean_weights(const Pcm& a);

// Entrywise sqrt(w^R_i * w^{-L}_i), renormalized.
WeightVector rl_geometric_mean(const Pcm& a, double tol = kEigenTol,
                               int max_iter = kEigenMaxIter);

// Selector used by the auditors and the command line.
enum class Method { em, gm, invleft, rlgm };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

WeightVector weights_by(const Pcm& a, Method m, double tol = kEigenTol,
                        int max_iter = kEigenMaxIter);

// Tie-aware total preorder: classes of alternatives (0-based) in preference order.
struct Ranking {
    std::vector<std::vector<int>> classes;

    int n() const;
    int class_of(int alt) const;
    bool strictly_prefers(int i, int j) const { return class_of(i) < class_of(j); }
    bool strict() const;  // every class a singleton
    const std::vector<int>& top() const { return classes.front(); }
    std::string str() const;  // e.g. "1>2~3>4" with 1-based labels

    friend bool operator==(const Ranking& a, const Ranking& b) { return a.classes == b.classes; }
    friend bool operator!=(const Ranking& a, const Ranking& b) { return !(a == b); }
};

Ranking reversed(const Ranking& r);

// Sorts descending and merges neighbours whose relative gap is below tie_tol; the chain
// merge keeps tie classes transitive by construction.
Ranking ranking_of(const WeightVector& v, double tie_tol = 1e-9);

namespace detail {

// Allocation-free core used by the public solvers and the RI hot loop. `a` is row-major
// n*n, `w` holds the start vector on entry and the result on exit. Returns true on
// convergence (iterate distance and residual both within tol).
bool power_iterate(const double* a, int n, double tol, int max_iter, double* w,
                   double* scratch, double& lambda, int& iterations, double& residual);

}  // namespace detail

}  // namespace pcm
