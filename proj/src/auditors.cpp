#include "pcm/auditors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pcm/generators.hpp"
#include "pcm/metrics.hpp"
#include "pcm/rng.hpp"

namespace pcm {

namespace {

std::vector<double> sum1(const std::vector<double>& v) {
    double s = std::accumulate(v.begin(), v.end(), 0.0);
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / s;
    return out;
}

// Reachability of every node from node 0 along `arc`, transposed when asked. Strong
// connectivity of a digraph is equivalent to full reach both ways from any one node.
bool full_reach(const std::vector<char>& arc, int n, bool transposed) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            bool edge = transposed ? arc[static_cast<size_t>(v) * n + u]
                                   : arc[static_cast<size_t>(u) * n + v];
            if (edge) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

// Kosaraju condensation; returns the component id of each node, ids in reverse
// topological order of the condensation (id 0 has no incoming arcs from other ids).
std::vector<int> scc_ids(const std::vector<char>& arc, int n, int& comp_count) {
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        // Iterative DFS with an explicit phase marker for the postorder push.
        std::vector<std::pair<int, int>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < n) {
                int v = next++;
                if (!seen[v] && arc[static_cast<size_t>(u) * n + v]) {
                    seen[v] = 1;
                    stack.emplace_back(v, 0);
                }
            } else {
                order.push_back(u);
                stack.pop_back();
            }
        }
    }
    std::vector<int> comp(static_cast<size_t>(n), -1);
    comp_count = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[static_cast<size_t>(*it)] != -1) continue;
        std::vector<int> stack{*it};
        comp[static_cast<size_t>(*it)] = comp_count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (comp[v] == -1 && arc[static_cast<size_t>(v) * n + u]) {
                    comp[static_cast<size_t>(v)] = comp_count;
                    stack.push_back(v);
                }
            }
        }
        ++comp_count;
    }
    return comp;
}

}  // namespace

const char* property_name(Property p) {
    switch (p) {
        case Property::asymmetry: return "asymmetry";
        case Property::group_coherence: return "group";
        case Property::scale_invariance: return "scale";
        case Property::monotonicity: return "monotonic";
        case Property::efficiency: return "efficiency";
    }
    return "unknown";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

Property property_from_name(const std::string& name) {
    if (name == "asymmetry") return Property::asymmetry;
    if (name == "group") return Property::group_coherence;
    if (name == "scale") return Property::scale_invariance;
    if (name == "monotonic") return Property::monotonicity;
    if (name == "efficiency") return Property::efficiency;
    throw Error(errc::invalid_spec, "unknown property name \"" + name + "\"");
}

AsymmetryReport audit_asymmetry(const Pcm& a, double tol, double tie_tol) {
    AsymmetryReport rep;
    EigenResult eig = right_eigenvector(a, tol);
    rep.lambda_max = eig.lambda_max;
    rep.right = normalized(eig.right, Norm::sum1);
    WeightVector left = left_eigenvector(a, tol);
    rep.inverse_left = rep.right;
    for (int i = 0; i < a.n(); ++i) rep.inverse_left.w[static_cast<size_t>(i)] = 1.0 / left[i];
    rep.inverse_left = normalized(rep.inverse_left, Norm::sum1);

    rep.right_ranking = ranking_of(rep.right, tie_tol);
    rep.inverse_left_ranking = ranking_of(rep.inverse_left, tie_tol);
    rep.euclidean_distance = euclidean(rep.right, rep.inverse_left);
    rep.chebyshev_distance = chebyshev(rep.right, rep.inverse_left);
    rep.max_weight_ratio = max_ratio(rep.right, rep.inverse_left);
    rep.tau = kendall_tau(rep.right_ranking, rep.inverse_left_ranking);

    for (int i = 0; i < a.n(); ++i) {
        for (int j = i + 1; j < a.n(); ++j) {
            bool rij = rep.right_ranking.strictly_prefers(i, j);
            bool rji = rep.right_ranking.strictly_prefers(j, i);
            bool lij = rep.inverse_left_ranking.strictly_prefers(i, j);
            bool lji = rep.inverse_left_ranking.strictly_prefers(j, i);
            if ((rij && lji) || (rji && lij)) rep.reversed_pairs.emplace_back(i, j);
        }
    }
    rep.any_reversal = !rep.reversed_pairs.empty();
    rep.top_reversal = rep.right_ranking.top() != rep.inverse_left_ranking.top();
    rep.full_reversal = rep.right_ranking != rep.inverse_left_ranking &&
                        rep.inverse_left_ranking == reversed(rep.right_ranking);
    rep.transpose_inversion_holds =
        ranking_of(left, tie_tol) == reversed(rep.right_ranking);
    rep.verdict = rep.right_ranking == rep.inverse_left_ranking ? Verdict::satisfied
                                                                : Verdict::violated;
    return rep;
}

GroupCoherenceReport audit_group_coherence(const std::vector<Pcm>& group, Method method,
                                           const std::vector<double>& group_weights,
                                           double tie_tol) {
    if (group.size() < 2) {
        throw Error(errc::size_mismatch, "group coherence needs at least two matrices");
    }
    int n = group.front().n();
    for (const Pcm& m : group) {
        if (m.n() != n) throw Error(errc::size_mismatch, "matrices in a group must share n");
    }
    std::vector<double> lambda(group.size(), 1.0 / static_cast<double>(group.size()));
    if (!group_weights.empty()) {
        if (group_weights.size() != group.size()) {
            throw Error(errc::size_mismatch, "one group weight per matrix is required");
        }
        double s = 0.0;
        for (double g : group_weights) {
            if (!(g > 0.0)) throw Error(errc::non_positive_weight, "group weights must be positive");
            s += g;
        }
        if (std::fabs(s - 1.0) > 1e-9) {
            throw Error(errc::invalid_spec, "group weights must sum to 1");
        }
        lambda = group_weights;
    }

    GroupCoherenceReport rep;
    std::vector<double> log_agg(static_cast<size_t>(n), 0.0);
    for (size_t k = 0; k < group.size(); ++k) {
        WeightVector v = normalized(weights_by(group[k], method), Norm::sum1);
        rep.individual_rankings.push_back(ranking_of(v, tie_tol));
        for (int i = 0; i < n; ++i) log_agg[static_cast<size_t>(i)] += lambda[k] * std::log(v[i]);
    }
    std::vector<double> path1(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) path1[static_cast<size_t>(i)] = std::exp(log_agg[static_cast<size_t>(i)]);
    rep.weigh_then_aggregate = WeightVector{sum1(path1), Norm::sum1};

    std::vector<double> vals(static_cast<size_t>(n) * n, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double acc = 0.0;
            for (size_t k = 0; k < group.size(); ++k) acc += lambda[k] * std::log(group[k].at(i, j));
            double g = std::exp(acc);
            vals[static_cast<size_t>(i) * n + j] = g;
            vals[static_cast<size_t>(j) * n + i] = 1.0 / g;
        }
    }
    rep.aggregate = detail::make_floating(n, std::move(vals));
    rep.aggregate_then_weigh = normalized(weights_by(*rep.aggregate, method), Norm::sum1);

    rep.path1_ranking = ranking_of(rep.weigh_then_aggregate, tie_tol);
    rep.path2_ranking = ranking_of(rep.aggregate_then_weigh, tie_tol);
    rep.path1_top = rep.path1_ranking.top();
    rep.path2_top = rep.path2_ranking.top();
    rep.verdict = rep.path1_top == rep.path2_top ? Verdict::satisfied : Verdict::violated;
    return rep;
}

ScaleInvarianceReport audit_scale_invariance(const Pcm& a, const std::vector<double>& alpha_grid,
                                             Method method, double tie_tol) {
    if (alpha_grid.empty()) throw Error(errc::invalid_spec, "the exponent grid is empty");
    for (size_t k = 0; k < alpha_grid.size(); ++k) {
        if (!(alpha_grid[k] > 0.0) || !std::isfinite(alpha_grid[k])) {
            throw Error(errc::non_positive_exponent, "grid exponents must be positive");
        }
        if (k > 0 && alpha_grid[k] <= alpha_grid[k - 1]) {
            throw Error(errc::invalid_spec, "the exponent grid must be strictly increasing");
        }
    }

    ScaleInvarianceReport rep;
    rep.grid = alpha_grid;
    auto rank_at = [&](double alpha) -> std::optional<Ranking> {
        try {
            return ranking_of(weights_by(hadamard_power(a, alpha), method), tie_tol);
        } catch (const NoConvergence&) {
            return std::nullopt;
        }
    };
    for (double alpha : alpha_grid) {
        auto r = rank_at(alpha);
        if (!r) rep.failed_alphas.push_back(alpha);
        rep.rankings.push_back(std::move(r));
    }

    for (size_t k = 0; k + 1 < rep.rankings.size(); ++k) {
        const auto& lo = rep.rankings[k];
        const auto& hi = rep.rankings[k + 1];
        if (!lo || !hi || *lo == *hi) continue;
        double alo = rep.grid[k], ahi = rep.grid[k + 1];
        Ranking rlo = *lo, rhi = *hi;
        while (ahi - alo > 1e-3) {
            double mid = 0.5 * (alo + ahi);
            auto rm = rank_at(mid);
            if (!rm) break;
            if (*rm == rlo) {
                alo = mid;
            } else {
                ahi = mid;
                rhi = *rm;
            }
        }
        rep.breaks.push_back(ScaleBreak{alo, ahi, rlo, rhi});
    }

    bool any_diff = !rep.breaks.empty();
    // Disagreements separated by a failed grid point still count.
    std::optional<Ranking> first;
    for (const auto& r : rep.rankings) {
        if (!r) continue;
        if (!first) {
            first = *r;
        } else if (*r != *first) {
            any_diff = true;
        }
    }
    if (any_diff) {
        rep.verdict = Verdict::violated;
    } else if (!rep.failed_alphas.empty()) {
        rep.verdict = Verdict::inconclusive;
    } else {
        rep.verdict = Verdict::satisfied;
    }
    return rep;
}

MonotonicityReport audit_monotonicity(const Pcm& a, int i, int j, Step step, Method method,
                                      double tie_tol, double weight_tol) {
    int n = a.n();
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
        throw Error(errc::invalid_spec, "the stepped entry must be off the diagonal");
    }
    MonotonicityReport rep;
    if (step.to_next_scale_value) {
        if (i > j) {
            // Stepping the mirror entry up would step (i, j) down; keep the audited
            // direction an increase.
            throw Error(errc::invalid_spec, "scale stepping audits entries above the diagonal");
        }
        rep.stepped = next_scale_step(a, i, j);
    } else {
        if (!(step.factor > 1.0) || !std::isfinite(step.factor)) {
            throw Error(errc::invalid_spec, "the multiplier must exceed 1");
        }
        std::vector<double> vals = a.values();
        double v = a.at(i, j) * step.factor;
        vals[static_cast<size_t>(i) * n + j] = v;
        vals[static_cast<size_t>(j) * n + i] = 1.0 / v;
        rep.stepped = detail::make_floating(n, std::move(vals));
    }

    rep.before = normalized(weights_by(a, method), Norm::sum1);
    rep.after = normalized(weights_by(*rep.stepped, method), Norm::sum1);
    rep.before_ranking = ranking_of(rep.before, tie_tol);
    rep.after_ranking = ranking_of(rep.after, tie_tol);
    for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        bool ahead_before =
            rep.before_ranking.class_of(i) <= rep.before_ranking.class_of(k);
        bool behind_after = rep.after_ranking.class_of(i) > rep.after_ranking.class_of(k);
        if (ahead_before && behind_after) rep.overtaken_by.push_back(k);
    }
    rep.rank_violated = !rep.overtaken_by.empty();
    rep.weight_before = rep.before[i];
    rep.weight_after = rep.after[i];
    rep.weight_violated = rep.weight_after < rep.weight_before - weight_tol;
    rep.verdict =
        rep.rank_violated || rep.weight_violated ? Verdict::violated : Verdict::satisfied;
    return rep;
}

DominanceOutcome check_dominance(const Pcm& a, const WeightVector& w,
                                 const WeightVector& candidate, double weak_slack,
                                 double strict_margin) {
    int n = a.n();
    if (w.n() != n || candidate.n() != n) {
        throw Error(errc::size_mismatch, "vector length must match the matrix order");
    }
    for (int i = 0; i < n; ++i) {
        if (!(w[i] > 0.0) || !(candidate[i] > 0.0)) {
            throw Error(errc::non_positive_weight, "dominance needs positive vectors");
        }
    }
    DominanceCertificate cert;
    cert.dominated = w;
    cert.dominator = candidate;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double r_old = std::fabs(a.at(i, j) - w[i] / w[j]);
            double r_new = std::fabs(a.at(i, j) - candidate[i] / candidate[j]);
            if (r_new > r_old + weak_slack) return NotDominating{i, j};
            cert.weak_pairs.emplace_back(i, j);
            if (r_new < r_old - strict_margin) cert.strict_pairs.emplace_back(i, j);
        }
    }
    if (cert.strict_pairs.empty()) return NotDominating{};
    return cert;
}

EfficiencyReport test_efficiency(const Pcm& a, const WeightVector& w, double arc_tol,
                                 std::uint64_t search_seed) {
    int n = a.n();
    if (w.n() != n) throw Error(errc::size_mismatch, "vector length must match the matrix order");
    for (int i = 0; i < n; ++i) {
        if (!(w[i] > 0.0)) throw Error(errc::non_positive_weight, "weights must be positive");
    }

    std::vector<char> arc(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            arc[static_cast<size_t>(i) * n + j] =
                w[i] / w[j] >= a.at(i, j) * (1.0 - arc_tol) ? 1 : 0;
        }
    }

    EfficiencyReport rep;
    rep.strongly_connected = full_reach(arc, n, false) && full_reach(arc, n, true);
    if (rep.strongly_connected) return rep;

    auto try_candidate = [&](const std::vector<double>& cand) -> bool {
        auto outcome = check_dominance(a, w, WeightVector{cand, Norm::none});
        if (auto* cert = std::get_if<DominanceCertificate>(&outcome)) {
            rep.certificate = *cert;
            return true;
        }
        return false;
    };
    // Feasible scaling factors for one deficit pair with ratio m = a/r > 1 form the
    // interval [1, min(2m-1, m/(2-m))]; for an excess pair (m < 1) the mirror interval
    // is [max(2m-1, m/(2-m)), 1]. Midpoints keep clear of both ends.
    auto scaled = [&](const std::vector<int>& coords, double t) {
        std::vector<double> cand = w.w;
        for (int c : coords) cand[static_cast<size_t>(c)] *= t;
        return cand;
    };

    for (int c = 0; c < n && !rep.certificate; ++c) {
        bool all_deficit = true, all_excess = true;
        double up = std::numeric_limits<double>::infinity();
        double down = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == c) continue;
            double m = a.at(c, j) / (w[c] / w[j]);
            if (m > 1.0) {
                all_excess = false;
                double bound = 2.0 * m - 1.0;
                if (m < 2.0) bound = std::min(bound, m / (2.0 - m));
                up = std::min(up, bound);
            } else if (m < 1.0) {
                all_deficit = false;
                double bound = m / (2.0 - m);
                bound = std::max(bound, 2.0 * m - 1.0);
                down = std::max(down, bound);
            } else {
                all_deficit = all_excess = false;
            }
        }
        if (all_deficit && up > 1.0) try_candidate(scaled({c}, 0.5 * (1.0 + up)));
        if (!rep.certificate && all_excess && down < 1.0) {
            try_candidate(scaled({c}, 0.5 * (1.0 + down)));
        }
    }

    if (!rep.certificate) {
        int comp_count = 0;
        std::vector<int> comp = scc_ids(arc, n, comp_count);
        std::vector<char> has_incoming(static_cast<size_t>(comp_count), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j && arc[static_cast<size_t>(i) * n + j] && comp[i] != comp[j]) {
                    has_incoming[static_cast<size_t>(comp[j])] = 1;
                }
            }
        }
        for (int s = 0; s < comp_count && !rep.certificate; ++s) {
            if (has_incoming[static_cast<size_t>(s)]) continue;
            std::vector<int> members;
            for (int i = 0; i < n; ++i) {
                if (comp[i] == s) members.push_back(i);
            }
            if (members.size() == static_cast<size_t>(n)) continue;
            // Every pair crossing out of a source component is in excess, so one common
            // shrink factor below 1 improves all of them at once.
            double down = 0.0;
            bool usable = true;
            for (int i : members) {
                for (int j = 0; j < n && usable; ++j) {
                    if (comp[j] == s) continue;
                    double m = a.at(i, j) / (w[i] / w[j]);
                    if (m >= 1.0) {
                        usable = false;
                        break;
                    }
                    double bound = m / (2.0 - m);
                    bound = std::max(bound, 2.0 * m - 1.0);
                    down = std::max(down, bound);
                }
            }
            if (usable && down < 1.0) try_candidate(scaled(members, 0.5 * (1.0 + down)));
        }
    }

    if (!rep.certificate) {
        rng::Stream stream(search_seed, {rng::kEfficiencySearch});
        for (int probe = 0; probe < 5000 && !rep.certificate; ++probe) {
            std::vector<int> coords;
            for (int c = 0; c < n; ++c) {
                if (stream.next_u64() & 1) coords.push_back(c);
            }
            if (coords.empty() || coords.size() == static_cast<size_t>(n)) continue;
            double t = std::exp(stream.uniform(-0.1, 0.1));
            if (t == 1.0) continue;
            try_candidate(scaled(coords, t));
        }
    }

    if (rep.certificate) {
        rep.efficient = false;
        rep.verdict = Verdict::violated;
    }
    return rep;
}

EfficiencyReport audit_efficiency(const Pcm& a, Method method, double tol, int max_iter) {
    return test_efficiency(a, weights_by(a, method, tol, max_iter));
}

}  // namespace pcm
