#include "pcm/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pcm {

const char* norm_name(Norm n) {
    switch (n) {
        case Norm::sum1: return "sum1";
        case Norm::sum100: return "sum100";
        case Norm::none: return "none";
    }
    return "?";
}

WeightVector normalized(const WeightVector& v, Norm target) {
    if (target == Norm::none) return v;
    double s = std::accumulate(v.w.begin(), v.w.end(), 0.0);
    double scale = (target == Norm::sum1 ? 1.0 : 100.0) / s;
    WeightVector out{v.w, target};
    for (double& x : out.w) x *= scale;
    return out;
}

namespace detail {

bool power_iterate(const double* a, int n, double tol, int max_iter, double* w,
                   double* scratch, double& lambda, int& iterations, double& residual) {
    double* v = scratch;
    // Successive-iterate convergence alone underestimates the residual by a factor of
    // about lambda, so the target tightens until the residual bound itself holds.
    double target = tol;
    for (int iter = 1; iter <= max_iter; ++iter) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double* row = a + static_cast<size_t>(i) * n;
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += row[j] * w[j];
            v[i] = acc;
            sum += acc;
        }
        double inv = 1.0 / sum;
        double delta = 0.0;
        for (int i = 0; i < n; ++i) {
            v[i] *= inv;
            delta = std::max(delta, std::fabs(v[i] - w[i]));
        }
        std::copy(v, v + n, w);
        if (delta < target) {
            double ws = 0.0, winf = 0.0;
            for (int i = 0; i < n; ++i) {
                ws += w[i];
                winf = std::max(winf, std::fabs(w[i]));
            }
            double num = 0.0, lam_num = 0.0;
            for (int i = 0; i < n; ++i) {
                const double* row = a + static_cast<size_t>(i) * n;
                double acc = 0.0;
                for (int j = 0; j < n; ++j) acc += row[j] * w[j];
                v[i] = acc;
                lam_num += acc;
            }
            double lam = lam_num / ws;
            for (int i = 0; i < n; ++i) num = std::max(num, std::fabs(v[i] - lam * w[i]));
            lambda = lam;
            residual = num / winf;
            iterations = iter;
            if (residual <= tol) return true;
            target *= 0.25;
            if (target < 1e-18) return false;
        }
        iterations = iter;
    }
    {
        // Report the best-effort lambda/residual for the NoConvergence payload.
        double ws = 0.0, winf = 0.0;
        for (int i = 0; i < n; ++i) {
            ws += w[i];
            winf = std::max(winf, std::fabs(w[i]));
        }
        double lam_num = 0.0;
        for (int i = 0; i < n; ++i) {
            const double* row = a + static_cast<size_t>(i) * n;
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += row[j] * w[j];
            v[i] = acc;
            lam_num += acc;
        }
        lambda = lam_num / ws;
        double num = 0.0;
        for (int i = 0; i < n; ++i) num = std::max(num, std::fabs(v[i] - lambda * w[i]));
        residual = num / winf;
    }
    return false;
}

}  // namespace detail

namespace {

EigenResult solve(const Pcm& a, double tol, int max_iter) {
    int n = a.n();
    std::vector<double> w(n, 1.0 / n), scratch(n);
    double lambda = 0.0, residual = 0.0;
    int iterations = 0;
    bool ok = detail::power_iterate(a.values().data(), n, tol, max_iter, w.data(),
                                    scratch.data(), lambda, iterations, residual);
    if (!ok) {
        throw NoConvergence("power iteration did not reach tolerance " + std::to_string(tol) +
                                " in " + std::to_string(max_iter) + " iterations",
                            w, residual, iterations);
    }
    EigenResult r;
    r.lambda_max = lambda;
    r.right = WeightVector{std::move(w), Norm::sum1};
    r.iterations = iterations;
    r.residual = residual;
    return r;
}

}  // namespace

EigenResult right_eigenvector(const Pcm& a, double tol, int max_iter) {
    return solve(a, tol, max_iter);
}

WeightVector left_eigenvector(const Pcm& a, double tol, int max_iter) {
    return solve(transpose(a), tol, max_iter).right;
}

WeightVector inverse_left_weights(const Pcm& a, double tol, int max_iter) {
    WeightVector left = left_eigenvector(a, tol, max_iter);
    WeightVector out{std::vector<double>(left.w.size()), Norm::sum1};
    for (size_t i = 0; i < left.w.size(); ++i) out.w[i] = 1.0 / left.w[i];
    return normalized(out, Norm::sum1);
}

WeightVector geometric_mean_weights(const Pcm& a) {
    int n = a.n();
    WeightVector out{std::vector<double>(n), Norm::sum1};
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += std::log(a.at(i, j));
        out.w[static_cast<size_t>(i)] = std::exp(acc / n);
    }
    return normalized(out, Norm::sum1);
}

WeightVector rl_geometric_mean(const Pcm& a, double tol, int max_iter) {
    WeightVector right = right_eigenvector(a, tol, max_iter).right;
    WeightVector invl = inverse_left_weights(a, tol, max_iter);
    WeightVector out{std::vector<double>(right.w.size()), Norm::sum1};
    for (size_t i = 0; i < right.w.size(); ++i) out.w[i] = std::sqrt(right.w[i] * invl.w[i]);
    return normalized(out, Norm::sum1);
}

int Ranking::n() const {
    int count = 0;
    for (const auto& c : classes) count += static_cast<int>(c.size());
    return count;
}

int Ranking::class_of(int alt) const {
    for (size_t k = 0; k < classes.size(); ++k) {
        for (int a : classes[k]) {
            if (a == alt) return static_cast<int>(k);
        }
    }
    return -1;
}

bool Ranking::strict() const {
    for (const auto& c : classes) {
        if (c.size() != 1) return false;
    }
    return true;
}

std::string Ranking::str() const {
    std::string out;
    for (size_t k = 0; k < classes.size(); ++k) {
        if (k > 0) out += ">";
        for (size_t t = 0; t < classes[k].size(); ++t) {
            if (t > 0) out += "~";
            out += std::to_string(classes[k][t] + 1);
        }
    }
    return out;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::em: return "em";
        case Method::gm: return "gm";
        case Method::invleft: return "invleft";
        case Method::rlgm: return "rlgm";
    }
    return "unknown";
}

Method method_from_name(const std::string& name) {
    if (name == "em") return Method::em;
    if (name == "gm") return Method::gm;
    if (name == "invleft") return Method::invleft;
    if (name == "rlgm") return Method::rlgm;
    throw Error(errc::invalid_spec, "unknown method name \"" + name + "\"");
}

WeightVector weights_by(const Pcm& a, Method m, double tol, int max_iter) {
    switch (m) {
        case Method::em: return right_eigenvector(a, tol, max_iter).right;
        case Method::gm: return geometric_mean_weights(a);
        case Method::invleft: return inverse_left_weights(a, tol, max_iter);
        case Method::rlgm: return rl_geometric_mean(a, tol, max_iter);
    }
    throw Error(errc::invalid_spec, "unknown method selector");
}

Ranking reversed(const Ranking& r) {
    Ranking out;
    out.classes.assign(r.classes.rbegin(), r.classes.rend());
    return out;
}

Ranking ranking_of(const WeightVector& v, double tie_tol) {
    int n = v.n();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] > v[b]; });
    Ranking r;
    for (int k = 0; k < n; ++k) {
        bool tie = false;
        if (k > 0) {
            double prev = v[idx[static_cast<size_t>(k) - 1]];
            double cur = v[idx[static_cast<size_t>(k)]];
            tie = (prev - cur) <= tie_tol * prev;
        }
        if (!tie) r.classes.emplace_back();
        r.classes.back().push_back(idx[static_cast<size_t>(k)]);
    }
    for (auto& c : r.classes) std::sort(c.begin(), c.end());
    return r;
}

}  // namespace pcm
