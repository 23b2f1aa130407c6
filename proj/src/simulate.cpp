#include "pcm/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "pcm/auditors.hpp"

namespace pcm {

using nlohmann::json;

namespace {

std::string fmt(double v) { return json(v).dump(); }

std::uint64_t parse_seed(const json& v) {
    if (v.is_string()) {
        try {
            return std::stoull(v.get<std::string>());
        } catch (const std::exception&) {
            throw Error(errc::parse_error, "not an unsigned integer: " + v.get<std::string>());
        }
    }
    return v.get<std::uint64_t>();
}

const char* status_name(TrialStatus s) {
    switch (s) {
        case TrialStatus::ok: return "ok";
        case TrialStatus::dismissed: return "dismissed";
        case TrialStatus::no_convergence: return "no_convergence";
    }
    return "unknown";
}

template <typename Trial, typename Body>
void run_trials(std::vector<Trial>& out, std::uint64_t trials, int threads, Body body) {
    out.resize(trials);
    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t t = lo; t < hi; ++t) body(t, out[t]);
    };
    if (threads <= 1 || trials < 256) {
        worker(0, trials);
        return;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = (trials + threads - 1) / threads;
    for (int k = 0; k < threads; ++k) {
        std::uint64_t lo = std::min<std::uint64_t>(trials, k * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(trials, lo + chunk);
        if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

const char* study_name(Study s) {
    switch (s) {
        case Study::asymmetry: return "asymmetry";
        case Study::monotonicity: return "monotonicity";
    }
    return "unknown";
}

Study study_from_name(const std::string& name) {
    if (name == "asymmetry") return Study::asymmetry;
    if (name == "monotonicity") return Study::monotonicity;
    throw Error(errc::invalid_spec, "unknown study name \"" + name + "\"");
}

void ExperimentSpec::check() const {
    if (trials < 1) throw Error(errc::invalid_spec, "at least one trial is required");
    if (n < 3 || n > 25) throw Error(errc::invalid_spec, "order must be between 3 and 25");
    if (!(cr_bin_width > 0.0)) throw Error(errc::invalid_spec, "bin width must be positive");
    if (!(delta >= 0.0)) throw Error(errc::invalid_spec, "delta must be nonnegative");
    if (threads < 1) throw Error(errc::invalid_spec, "thread count must be at least 1");
    if (study == Study::monotonicity && scheme != Scheme::saaty_uniform) {
        // Scale stepping needs on-scale entries, which only this scheme guarantees.
        throw Error(errc::invalid_spec, "the monotonicity study runs on saaty_uniform draws");
    }
}

ExperimentSpec experiment_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, std::string("experiment spec: ") + e.what());
    }
    try {
        if (doc.value("format", "") != "pcm-experiment-v1") {
            throw Error(errc::invalid_spec, "expected format pcm-experiment-v1");
        }
        ExperimentSpec spec;
        spec.scheme = scheme_from_name(doc.at("scheme").get<std::string>());
        spec.study = study_from_name(doc.value("study", "asymmetry"));
        spec.n = doc.at("n").get<int>();
        spec.trials = parse_seed(doc.at("trials"));
        spec.seed = parse_seed(doc.at("seed"));
        spec.cr_bin_width = doc.value("cr_bin_width", 0.01);
        spec.delta = doc.value("delta", 1.0);
        spec.method = method_from_name(doc.value("method", "em"));
        spec.threads = doc.value("threads", 1);
        spec.check();
        return spec;
    } catch (const json::exception& e) {
        throw Error(errc::invalid_spec, std::string("experiment spec: ") + e.what());
    }
}

std::string experiment_to_json(const ExperimentSpec& spec) {
    json doc;
    doc["format"] = "pcm-experiment-v1";
    doc["scheme"] = scheme_name(spec.scheme);
    doc["study"] = study_name(spec.study);
    doc["n"] = spec.n;
    doc["trials"] = spec.trials;
    doc["seed"] = std::to_string(spec.seed);
    doc["cr_bin_width"] = spec.cr_bin_width;
    doc["delta"] = spec.delta;
    doc["method"] = method_name(spec.method);
    doc["threads"] = spec.threads;
    return doc.dump(2) + "\n";
}

SimulationResult run_experiment(const ExperimentSpec& spec, const RiTable& ri) {
    spec.check();
    SimulationResult result;
    result.spec = spec;
    result.ri = ri.ri_for(spec.n);
    double ri_n = result.ri;
    int n = spec.n;

    auto draw_matrix = [&](rng::Stream& stream) -> Pcm {
        switch (spec.scheme) {
            case Scheme::saaty_uniform: return saaty_uniform(n, stream);
            case Scheme::consistent_perturbed:
                return consistent_perturbed(n, spec.delta, stream);
            case Scheme::unit_interval_ratio: return unit_interval_ratio(n, stream);
            case Scheme::ishizaka_lusti:
                // Unreachable; the ishizaka path keeps the draw's own CR and group.
                break;
        }
        throw Error(errc::invalid_spec, "unhandled scheme");
    };

    if (spec.study == Study::asymmetry) {
        run_trials(result.asymmetry_trials, spec.trials, spec.threads,
                   [&](std::uint64_t t, AsymmetryTrial& row) {
                       row.trial = t;
                       rng::Stream stream(spec.seed, {rng::kSimulateTrial,
                                                      static_cast<std::uint64_t>(n), t});
                       try {
                           if (spec.scheme == Scheme::ishizaka_lusti) {
                               IshizakaDraw draw = ishizaka_lusti(n, stream, ri_n);
                               row.cr = draw.cr;
                               row.group = draw.group;
                               if (draw.dismissed) {
                                   row.status = TrialStatus::dismissed;
                                   return;
                               }
                               AsymmetryReport rep = audit_asymmetry(draw.matrix);
                               row.any_reversal = rep.any_reversal;
                               row.top_reversal = rep.top_reversal;
                               row.full_reversal = rep.full_reversal;
                               row.tau = rep.tau;
                               row.euclidean_distance = rep.euclidean_distance;
                               row.chebyshev_distance = rep.chebyshev_distance;
                               row.max_weight_ratio = rep.max_weight_ratio;
                               return;
                           }
                           Pcm a = draw_matrix(stream);
                           AsymmetryReport rep = audit_asymmetry(a);
                           row.cr = ((rep.lambda_max - n) / (n - 1)) / ri_n;
                           if (row.cr < 0.0 && row.cr > -1e-9) row.cr = 0.0;
                           row.any_reversal = rep.any_reversal;
                           row.top_reversal = rep.top_reversal;
                           row.full_reversal = rep.full_reversal;
                           row.tau = rep.tau;
                           row.euclidean_distance = rep.euclidean_distance;
                           row.chebyshev_distance = rep.chebyshev_distance;
                           row.max_weight_ratio = rep.max_weight_ratio;
                       } catch (const NoConvergence&) {
                           row.status = TrialStatus::no_convergence;
                       }
                   });
    } else {
        run_trials(result.monotonicity_trials, spec.trials, spec.threads,
                   [&](std::uint64_t t, MonotonicityTrial& row) {
                       row.trial = t;
                       rng::Stream stream(spec.seed, {rng::kSimulateTrial,
                                                      static_cast<std::uint64_t>(n), t});
                       try {
                           Pcm a = saaty_uniform(n, stream);
                           row.cr = consistency_index(a) / ri_n;
                           for (int i = 0; i < n; ++i) {
                               for (int j = i + 1; j < n; ++j) {
                                   MonotonicityReport rep = audit_monotonicity(
                                       a, i, j, Step::scale(), spec.method);
                                   ++row.steps;
                                   if (rep.rank_violated) ++row.rank_violations;
                                   if (rep.weight_violated) ++row.weight_violations;
                               }
                           }
                       } catch (const NoConvergence&) {
                           row.status = TrialStatus::no_convergence;
                       }
                   });
    }
    return result;
}

void write_trials_csv(const SimulationResult& result, std::ostream& out) {
    if (result.spec.study == Study::asymmetry) {
        out << "# schema=pcm-asymmetry-trials-v1\n";
        out << "trial,status,cr,group,any_reversal,top_reversal,full_reversal,tau,"
               "euclidean,chebyshev,max_ratio\n";
        for (const auto& row : result.asymmetry_trials) {
            out << row.trial << "," << status_name(row.status) << ",";
            if (row.status == TrialStatus::no_convergence) {
                out << ",,,,,,,," << "\n";
                continue;
            }
            out << fmt(row.cr) << "," << row.group << "," << int(row.any_reversal) << ","
                << int(row.top_reversal) << "," << int(row.full_reversal);
            if (row.status == TrialStatus::dismissed) {
                out << ",,,,\n";
                continue;
            }
            out << "," << fmt(row.tau) << "," << fmt(row.euclidean_distance) << ","
                << fmt(row.chebyshev_distance) << "," << fmt(row.max_weight_ratio) << "\n";
        }
        return;
    }
    out << "# schema=pcm-monotonicity-trials-v1\n";
    out << "trial,status,cr,steps,rank_violations,weight_violations\n";
    for (const auto& row : result.monotonicity_trials) {
        out << row.trial << "," << status_name(row.status) << ",";
        if (row.status == TrialStatus::no_convergence) {
            out << ",,,\n";
            continue;
        }
        out << fmt(row.cr) << "," << row.steps << "," << row.rank_violations << ","
            << row.weight_violations << "\n";
    }
}

void write_summary_csv(const SimulationResult& result, std::ostream& out) {
    double width = result.spec.cr_bin_width;
    auto bin_of = [&](double cr) {
        int b = static_cast<int>(std::floor(cr / width));
        return b < 0 ? 0 : b;
    };
    if (result.spec.study == Study::asymmetry) {
        struct Bin {
            std::uint64_t matrices = 0, any = 0, top = 0, full = 0;
            double tau_sum = 0.0;
        };
        std::vector<Bin> bins;
        for (const auto& row : result.asymmetry_trials) {
            if (row.status != TrialStatus::ok) continue;
            int b = bin_of(row.cr);
            if (b >= static_cast<int>(bins.size())) bins.resize(b + 1);
            Bin& bin = bins[b];
            ++bin.matrices;
            bin.any += row.any_reversal;
            bin.top += row.top_reversal;
            bin.full += row.full_reversal;
            bin.tau_sum += row.tau;
        }
        out << "# schema=pcm-asymmetry-summary-v1\n";
        out << "bin_lo,bin_hi,matrices,any_reversal,any_reversal_freq,any_reversal_stderr,"
               "top_reversal,top_reversal_freq,full_reversal,full_reversal_freq,mean_tau\n";
        for (size_t b = 0; b < bins.size(); ++b) {
            const Bin& bin = bins[b];
            double m = static_cast<double>(bin.matrices);
            double f = bin.matrices ? bin.any / m : 0.0;
            double se = bin.matrices ? std::sqrt(f * (1.0 - f) / m) : 0.0;
            out << fmt(b * width) << "," << fmt((b + 1) * width) << "," << bin.matrices << ","
                << bin.any << "," << fmt(f) << "," << fmt(se) << "," << bin.top << ","
                << fmt(bin.matrices ? bin.top / m : 0.0) << "," << bin.full << ","
                << fmt(bin.matrices ? bin.full / m : 0.0) << ","
                << fmt(bin.matrices ? bin.tau_sum / m : 0.0) << "\n";
        }
        return;
    }
    struct Bin {
        std::uint64_t matrices = 0, steps = 0, rank = 0, weight = 0;
    };
    std::vector<Bin> bins;
    for (const auto& row : result.monotonicity_trials) {
        if (row.status != TrialStatus::ok) continue;
        int b = bin_of(row.cr);
        if (b >= static_cast<int>(bins.size())) bins.resize(b + 1);
        Bin& bin = bins[b];
        ++bin.matrices;
        bin.steps += row.steps;
        bin.rank += row.rank_violations;
        bin.weight += row.weight_violations;
    }
    out << "# schema=pcm-monotonicity-summary-v1\n";
    out << "bin_lo,bin_hi,matrices,steps,rank_violations,rank_violation_freq,"
           "weight_violations,weight_violation_freq\n";
    for (size_t b = 0; b < bins.size(); ++b) {
        const Bin& bin = bins[b];
        double s = static_cast<double>(bin.steps);
        out << fmt(b * width) << "," << fmt((b + 1) * width) << "," << bin.matrices << ","
            << bin.steps << "," << bin.rank << "," << fmt(bin.steps ? bin.rank / s : 0.0)
            << "," << bin.weight << "," << fmt(bin.steps ? bin.weight / s : 0.0) << "\n";
    }
}

}  // namespace pcm
