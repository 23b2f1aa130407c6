#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcm/auditors.hpp"
#include "pcm/inconsistency.hpp"
#include "pcm/io.hpp"
#include "pcm/metrics.hpp"
#include "pcm/simulate.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace pcm;

namespace {

constexpr const char* kToolVersion = "1.0.0";

std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(errc::io_error, "cannot write " + path);
    out << text;
}

// The manifest names the command, every input and output with its digest, and the seeds
// in play: identical manifests modulo the timestamp imply bit-identical outputs.
struct Manifest {
    std::string command;
    std::vector<std::string> args;
    json seeds = json::object();
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;

    void write(const std::string& path) const {
        json doc;
        doc["command"] = command;
        doc["args"] = args;
        doc["tool_version"] = kToolVersion;
        doc["timestamp"] = iso_timestamp();
        doc["seeds"] = seeds;
        json ins = json::array();
        for (const auto& p : inputs) ins.push_back({{"path", p}, {"digest", file_digest(p)}});
        json outs = json::array();
        for (const auto& p : outputs) outs.push_back({{"path", p}, {"digest", file_digest(p)}});
        doc["inputs"] = std::move(ins);
        doc["outputs"] = std::move(outs);
        write_text_file(path, doc.dump(2) + "\n");
    }
};

struct RiOptions {
    std::uint64_t trials = kRiDefaultTrials;
    std::uint64_t seed = kRiDefaultSeed;
    std::string cache_dir = default_ri_cache_dir();
    std::string user_spec;  // "4:0.884,5:1.109"

    void attach(CLI::App* cmd) {
        cmd->add_option("--ri-trials", trials, "Trials per random-index estimate");
        cmd->add_option("--ri-seed", seed, "Seed for random-index estimation");
        cmd->add_option("--ri-cache", cache_dir, "Random-index cache directory");
        cmd->add_option("--ri", user_spec,
                        "Fixed random-index values as n:value[,n:value...]; disables estimation");
    }

    void record(json& seeds) const {
        if (user_spec.empty()) {
            seeds["ri_seed"] = std::to_string(seed);
            seeds["ri_trials"] = trials;
        } else {
            seeds["ri_table"] = user_spec;
        }
    }

    RiTable table() const {
        if (user_spec.empty()) return RiTable::estimated(trials, seed, cache_dir);
        std::map<int, double> values;
        std::stringstream ss(user_spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) {
                throw Error(errc::invalid_spec, "--ri expects n:value pairs");
            }
            try {
                values[std::stoi(item.substr(0, colon))] = std::stod(item.substr(colon + 1));
            } catch (const std::exception&) {
                throw Error(errc::invalid_spec, "--ri expects n:value pairs");
            }
        }
        return RiTable::user(std::move(values));
    }
};

json weights_json(const WeightVector& v) {
    json arr = json::array();
    for (int i = 0; i < v.n(); ++i) arr.push_back(v[i]);
    return arr;
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (auto [i, j] : pairs) arr.push_back({i + 1, j + 1});
    return arr;
}

json alts_json(const std::vector<int>& alts) {
    json arr = json::array();
    for (int a : alts) arr.push_back(a + 1);
    return arr;
}

std::vector<double> parse_alpha_grid(const std::string& text) {
    std::vector<double> grid;
    auto colon = text.find(':');
    try {
        if (colon != std::string::npos) {
            // lo:hi:step
            auto second = text.find(':', colon + 1);
            if (second == std::string::npos) {
                throw Error(errc::invalid_spec, "--alpha-grid range form is lo:hi:step");
            }
            double lo = std::stod(text.substr(0, colon));
            double hi = std::stod(text.substr(colon + 1, second - colon - 1));
            double step = std::stod(text.substr(second + 1));
            if (!(step > 0.0)) throw Error(errc::invalid_spec, "grid step must be positive");
            for (double a = lo; a <= hi + 1e-12; a += step) grid.push_back(a);
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(errc::invalid_spec, "cannot parse --alpha-grid \"" + text + "\"");
    }
    return grid;
}

// ---- weigh ----------------------------------------------------------------

struct WeighArgs {
    std::string matrix_file;
    std::string methods = "em,gm,invleft,rlgm";
    std::string norm = "sum100";
    std::string json_out;
    RiOptions ri;
};

int cmd_weigh(const WeighArgs& args) {
    Pcm a = read_matrix_file(args.matrix_file);
    Norm norm = args.norm == "sum1" ? Norm::sum1 : Norm::sum100;
    if (args.norm != "sum1" && args.norm != "sum100") {
        throw Error(errc::invalid_spec, "--norm must be sum1 or sum100");
    }

    std::vector<Method> methods;
    {
        std::stringstream ss(args.methods);
        std::string item;
        while (std::getline(ss, item, ',')) methods.push_back(method_from_name(item));
    }

    json doc;
    doc["matrix"] = args.matrix_file;
    doc["n"] = a.n();
    doc["norm"] = args.norm;

    EigenResult eig = right_eigenvector(a);
    doc["lambda_max"] = eig.lambda_max;
    std::printf("matrix %s  n=%d  %s\n", args.matrix_file.c_str(), a.n(),
                a.exact() ? "exact" : "floating");
    std::printf("lambda_max = %s\n", fmt6(eig.lambda_max).c_str());
    if (a.n() >= 3) {
        InconsistencyReport inc = consistency_ratio(a, args.ri.table());
        doc["ci"] = inc.ci;
        doc["ri"] = inc.ri;
        doc["cr"] = inc.cr;
        doc["acceptable"] = inc.acceptable;
        std::printf("CI = %s  RI(%d) = %s  CR = %s  %s\n", fmt6(inc.ci).c_str(), a.n(),
                    fmt6(inc.ri).c_str(), fmt6(inc.cr).c_str(),
                    inc.acceptable ? "(acceptable)" : "(above 0.1)");
    }

    json jweights = json::object();
    json jrankings = json::object();
    std::vector<WeightVector> table;
    for (Method m : methods) table.push_back(normalized(weights_by(a, m), norm));

    std::printf("%4s", "alt");
    for (Method m : methods) std::printf("  %10s", method_name(m));
    std::printf("\n");
    for (int i = 0; i < a.n(); ++i) {
        std::printf("%4d", i + 1);
        for (const auto& v : table) std::printf("  %10s", fmt6(v[i]).c_str());
        std::printf("\n");
    }
    for (size_t k = 0; k < methods.size(); ++k) {
        Ranking r = ranking_of(table[k]);
        std::printf("ranking %-8s %s\n", method_name(methods[k]), r.str().c_str());
        jweights[method_name(methods[k])] = weights_json(table[k]);
        jrankings[method_name(methods[k])] = r.str();
    }
    doc["weights"] = std::move(jweights);
    doc["rankings"] = std::move(jrankings);

    if (!args.json_out.empty()) {
        write_text_file(args.json_out, doc.dump(2) + "\n");
        Manifest man;
        man.command = "weigh";
        man.args = {args.matrix_file, "--method", args.methods, "--norm", args.norm};
        man.inputs = {args.matrix_file};
        man.outputs = {args.json_out};
        args.ri.record(man.seeds);
        man.write(args.json_out + ".manifest.json");
    }
    return 0;
}

// ---- audit ----------------------------------------------------------------

struct AuditArgs {
    std::vector<std::string> matrix_files;
    std::string property;
    std::string method = "em";
    std::string alpha_grid = "0.5,1,2,3,4,5";
    std::string entry;  // "I,J" 1-based
    double factor = 0.0;
    bool scale_step = false;
    std::string group_weights;
    std::string out_dir;
    double tie_tol = 1e-9;
    RiOptions ri;
};

struct AuditRow {
    std::string matrix;
    std::string property;
    Verdict verdict;
    json doc;
};

json base_doc(const std::string& file, Property p, Verdict v, const json& cr) {
    json doc;
    doc["matrix"] = file;
    doc["property"] = property_name(p);
    doc["verdict"] = verdict_name(v);
    doc["cr"] = cr;
    return doc;
}

json asymmetry_doc(const std::string& file, const AsymmetryReport& rep, const json& cr) {
    json doc = base_doc(file, Property::asymmetry, rep.verdict, cr);
    doc["lambda_max"] = rep.lambda_max;
    doc["right"] = weights_json(rep.right);
    doc["inverse_left"] = weights_json(rep.inverse_left);
    doc["right_ranking"] = rep.right_ranking.str();
    doc["inverse_left_ranking"] = rep.inverse_left_ranking.str();
    doc["euclidean"] = rep.euclidean_distance;
    doc["chebyshev"] = rep.chebyshev_distance;
    doc["max_ratio"] = rep.max_weight_ratio;
    doc["tau"] = rep.tau;
    doc["reversed_pairs"] = pairs_json(rep.reversed_pairs);
    doc["any_reversal"] = rep.any_reversal;
    doc["top_reversal"] = rep.top_reversal;
    doc["full_reversal"] = rep.full_reversal;
    doc["transpose_inversion_holds"] = rep.transpose_inversion_holds;
    return doc;
}

json group_doc(const std::string& label, const GroupCoherenceReport& rep) {
    json doc = base_doc(label, Property::group_coherence, rep.verdict, nullptr);
    doc["weigh_then_aggregate"] = weights_json(rep.weigh_then_aggregate);
    doc["aggregate_then_weigh"] = weights_json(rep.aggregate_then_weigh);
    doc["path1_ranking"] = rep.path1_ranking.str();
    doc["path2_ranking"] = rep.path2_ranking.str();
    doc["path1_top"] = alts_json(rep.path1_top);
    doc["path2_top"] = alts_json(rep.path2_top);
    json indiv = json::array();
    for (const auto& r : rep.individual_rankings) indiv.push_back(r.str());
    doc["individual_rankings"] = std::move(indiv);
    return doc;
}

json scale_doc(const std::string& file, const ScaleInvarianceReport& rep, const json& cr) {
    json doc = base_doc(file, Property::scale_invariance, rep.verdict, cr);
    doc["grid"] = rep.grid;
    json ranks = json::array();
    for (const auto& r : rep.rankings) ranks.push_back(r ? json(r->str()) : json(nullptr));
    doc["rankings"] = std::move(ranks);
    json breaks = json::array();
    for (const auto& b : rep.breaks) {
        breaks.push_back({{"alpha_low", b.alpha_low},
                          {"alpha_high", b.alpha_high},
                          {"low_ranking", b.low_ranking.str()},
                          {"high_ranking", b.high_ranking.str()}});
    }
    doc["breaks"] = std::move(breaks);
    doc["failed_alphas"] = rep.failed_alphas;
    return doc;
}

json monotonic_doc(const std::string& file, int i, int j, const MonotonicityReport& rep,
                   const json& cr) {
    json doc = base_doc(file, Property::monotonicity, rep.verdict, cr);
    doc["entry"] = {i + 1, j + 1};
    doc["rank_violated"] = rep.rank_violated;
    doc["weight_violated"] = rep.weight_violated;
    doc["before"] = weights_json(rep.before);
    doc["after"] = weights_json(rep.after);
    doc["before_ranking"] = rep.before_ranking.str();
    doc["after_ranking"] = rep.after_ranking.str();
    doc["overtaken_by"] = alts_json(rep.overtaken_by);
    doc["weight_before"] = rep.weight_before;
    doc["weight_after"] = rep.weight_after;
    return doc;
}

json efficiency_doc(const std::string& file, const std::string& method,
                    const EfficiencyReport& rep, const json& cr) {
    json doc = base_doc(file, Property::efficiency, rep.verdict, cr);
    doc["method"] = method;
    doc["efficient"] = rep.efficient;
    doc["strongly_connected"] = rep.strongly_connected;
    if (rep.certificate) {
        doc["certificate"] = {{"dominated", weights_json(rep.certificate->dominated)},
                              {"dominator", weights_json(rep.certificate->dominator)},
                              {"weak_pairs", rep.certificate->weak_pairs.size()},
                              {"strict_pairs", pairs_json(rep.certificate->strict_pairs)}};
    }
    return doc;
}

int cmd_audit(const AuditArgs& args) {
    if (args.matrix_files.empty()) throw Error(errc::invalid_spec, "no matrix files given");
    Property prop = Property::asymmetry;
    bool all = args.property == "all";
    if (!all) prop = property_from_name(args.property);
    Method method = method_from_name(args.method);
    RiTable ri = args.ri.table();

    std::vector<Pcm> matrices;
    for (const auto& f : args.matrix_files) matrices.push_back(read_matrix_file(f));

    std::vector<AuditRow> rows;
    auto record = [&](const std::string& file, Property p, Verdict v, json doc) {
        std::printf("%-32s %-10s %s\n", file.c_str(), property_name(p), verdict_name(v));
        rows.push_back(AuditRow{file, property_name(p), v, std::move(doc)});
    };

    auto cr_of = [&](const Pcm& a) -> json {
        if (a.n() < 3) return nullptr;
        return consistency_ratio(a, ri).cr;
    };

    for (size_t k = 0; k < matrices.size(); ++k) {
        const Pcm& a = matrices[k];
        const std::string& file = args.matrix_files[k];
        json cr = cr_of(a);
        if (all || prop == Property::asymmetry) {
            AsymmetryReport rep = audit_asymmetry(a, kEigenTol, args.tie_tol);
            record(file, Property::asymmetry, rep.verdict, asymmetry_doc(file, rep, cr));
        }
        if (all || prop == Property::scale_invariance) {
            ScaleInvarianceReport rep = audit_scale_invariance(
                a, parse_alpha_grid(args.alpha_grid), method, args.tie_tol);
            record(file, Property::scale_invariance, rep.verdict, scale_doc(file, rep, cr));
        }
        if (all || prop == Property::monotonicity) {
            Step step = args.factor > 0.0 ? Step::multiply(args.factor) : Step::scale();
            std::vector<std::pair<int, int>> entries;
            if (!args.entry.empty()) {
                int i = 0, j = 0;
                if (std::sscanf(args.entry.c_str(), "%d,%d", &i, &j) != 2) {
                    throw Error(errc::invalid_spec, "--entry expects I,J (1-based)");
                }
                entries.emplace_back(i - 1, j - 1);
            } else {
                for (int i = 0; i < a.n(); ++i) {
                    for (int j = i + 1; j < a.n(); ++j) entries.emplace_back(i, j);
                }
            }
            for (auto [i, j] : entries) {
                try {
                    MonotonicityReport rep =
                        audit_monotonicity(a, i, j, step, method, args.tie_tol);
                    record(file, Property::monotonicity, rep.verdict,
                           monotonic_doc(file, i, j, rep, cr));
                } catch (const Error& e) {
                    if (e.code() != errc::not_on_scale || !all) throw;
                    // Sweeping every entry under --property all tolerates off-scale
                    // values; an explicit monotonicity request does not.
                    json doc = base_doc(file, Property::monotonicity, Verdict::inconclusive, cr);
                    doc["entry"] = {i + 1, j + 1};
                    doc["note"] = e.what();
                    record(file, Property::monotonicity, Verdict::inconclusive, std::move(doc));
                }
            }
        }
        if (all || prop == Property::efficiency) {
            EfficiencyReport rep = audit_efficiency(a, method);
            record(file, Property::efficiency, rep.verdict,
                   efficiency_doc(file, args.method, rep, cr));
        }
    }
    if ((all && matrices.size() >= 2) || prop == Property::group_coherence) {
        std::vector<double> gw;
        if (!args.group_weights.empty()) {
            std::stringstream ss(args.group_weights);
            std::string item;
            while (std::getline(ss, item, ',')) gw.push_back(std::stod(item));
        }
        GroupCoherenceReport rep = audit_group_coherence(matrices, method, gw, args.tie_tol);
        std::string label = "group(" + std::to_string(matrices.size()) + ")";
        record(label, Property::group_coherence, rep.verdict, group_doc(label, rep));
    }

    if (!args.out_dir.empty()) {
        fs::create_directories(args.out_dir);
        std::string jsonl_path = args.out_dir + "/audits.jsonl";
        std::ostringstream jsonl;
        for (const auto& row : rows) jsonl << row.doc.dump() << "\n";
        write_text_file(jsonl_path, jsonl.str());

        // One row per matrix: verdicts per property (worst across repeats) plus the
        // asymmetry metrics when present.
        std::ostringstream csv;
        csv << "# schema=pcm-audit-summary-v1\n";
        csv << "matrix,cr,asymmetry,group,scale,monotonic,efficiency,tau,euclidean,"
               "chebyshev,max_ratio\n";
        for (size_t k = 0; k < matrices.size(); ++k) {
            const std::string& file = args.matrix_files[k];
            std::map<std::string, std::string> verdicts;
            json metrics;
            json cr;
            for (const auto& row : rows) {
                if (row.matrix != file) continue;
                if (row.doc.contains("cr") && !row.doc["cr"].is_null()) cr = row.doc["cr"];
                auto& slot = verdicts[row.property];
                if (slot.empty() || row.verdict == Verdict::violated) {
                    slot = verdict_name(row.verdict);
                }
                if (row.property == property_name(Property::asymmetry)) metrics = row.doc;
            }
            csv << file << "," << (cr.is_null() ? "" : json(cr).dump());
            for (const char* p : {"asymmetry", "group", "scale", "monotonic", "efficiency"}) {
                csv << "," << (verdicts.count(p) ? verdicts[p] : "");
            }
            for (const char* m : {"tau", "euclidean", "chebyshev", "max_ratio"}) {
                csv << "," << (metrics.contains(m) ? metrics[m].dump() : "");
            }
            csv << "\n";
        }
        std::string csv_path = args.out_dir + "/summary.csv";
        write_text_file(csv_path, csv.str());

        Manifest man;
        man.command = "audit";
        man.args = args.matrix_files;
        man.args.push_back("--property");
        man.args.push_back(args.property);
        man.args.push_back("--method");
        man.args.push_back(args.method);
        man.inputs = args.matrix_files;
        man.outputs = {jsonl_path, csv_path};
        args.ri.record(man.seeds);
        man.write(args.out_dir + "/manifest.json");
    }

    for (const auto& row : rows) {
        if (row.verdict == Verdict::violated) return 1;
    }
    return 0;
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
    std::string spec_file;
    std::string out_dir = ".";
    RiOptions ri;
};

int cmd_simulate(const SimulateArgs& args) {
    std::ifstream in(args.spec_file);
    if (!in) throw Error(errc::io_error, "cannot open " + args.spec_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    ExperimentSpec spec = experiment_from_json(ss.str());

    SimulationResult result = run_experiment(spec, args.ri.table());

    fs::create_directories(args.out_dir);
    std::string trials_path = args.out_dir + "/trials.csv";
    std::string summary_path = args.out_dir + "/summary.csv";
    {
        std::ofstream trials(trials_path, std::ios::binary);
        if (!trials) throw Error(errc::io_error, "cannot write " + trials_path);
        write_trials_csv(result, trials);
        std::ofstream summary(summary_path, std::ios::binary);
        if (!summary) throw Error(errc::io_error, "cannot write " + summary_path);
        write_summary_csv(result, summary);
    }

    std::uint64_t usable = 0, dismissed = 0, failed = 0;
    for (const auto& t : result.asymmetry_trials) {
        usable += t.status == TrialStatus::ok;
        dismissed += t.status == TrialStatus::dismissed;
        failed += t.status == TrialStatus::no_convergence;
    }
    for (const auto& t : result.monotonicity_trials) {
        usable += t.status == TrialStatus::ok;
        failed += t.status == TrialStatus::no_convergence;
    }
    std::printf("%s study, scheme %s, n=%d: %llu trials (%llu usable, %llu dismissed, "
                "%llu unconverged), RI=%s\n",
                study_name(spec.study), scheme_name(spec.scheme), spec.n,
                static_cast<unsigned long long>(spec.trials),
                static_cast<unsigned long long>(usable),
                static_cast<unsigned long long>(dismissed),
                static_cast<unsigned long long>(failed), fmt6(result.ri).c_str());
    std::printf("wrote %s and %s\n", trials_path.c_str(), summary_path.c_str());

    Manifest man;
    man.command = "simulate";
    man.args = {args.spec_file};
    man.inputs = {args.spec_file};
    man.outputs = {trials_path, summary_path};
    man.seeds["seed"] = std::to_string(spec.seed);
    args.ri.record(man.seeds);
    man.write(args.out_dir + "/manifest.json");
    return 0;
}

// ---- ri -------------------------------------------------------------------

struct RiArgs {
    std::string orders = "3,4,5,6,7,8,9";
    std::uint64_t trials = 100000;
    std::uint64_t seed = kRiDefaultSeed;
    std::string cache_dir = default_ri_cache_dir();
    int threads = 0;
};

int cmd_ri(const RiArgs& args) {
    if (args.trials < 1) throw Error(errc::invalid_spec, "at least one trial is required");
    if (args.trials < 1000) {
        std::fprintf(stderr, "warning: %llu trials gives a noisy estimate; consider 1000+\n",
                     static_cast<unsigned long long>(args.trials));
    }
    std::vector<int> orders;
    {
        std::stringstream ss(args.orders);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                orders.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw Error(errc::invalid_spec, "--n expects a comma list of orders");
            }
        }
    }
    fs::create_directories(args.cache_dir);
    std::printf("%4s  %10s  %10s  %10s\n", "n", "ri", "stderr", "trials");
    Manifest man;
    man.command = "ri";
    man.seeds["seed"] = std::to_string(args.seed);
    man.seeds["trials"] = args.trials;
    for (int n : orders) {
        RiEstimate e = estimate_random_index(n, args.trials, args.seed, args.threads);
        std::string path =
            args.cache_dir + "/" + ri_cache_file_name(n, args.trials, args.seed);
        write_ri_cache_file(e, path);
        man.outputs.push_back(path);
        std::printf("%4d  %10s  %10s  %10llu\n", n, fmt6(e.ri).c_str(), fmt6(e.stderr_).c_str(),
                    static_cast<unsigned long long>(e.trials));
    }
    man.write(args.cache_dir + "/manifest.json");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairwise comparison matrix toolkit"};
    app.set_version_flag("--version", std::string("pcm ") + kToolVersion);
    app.require_subcommand(1);

    WeighArgs weigh;
    auto* cw = app.add_subcommand("weigh", "Weights, ranking, and consistency of one matrix");
    cw->add_option("matrix", weigh.matrix_file, "Matrix file (.json or .csv)")->required();
    cw->add_option("--method", weigh.methods, "Comma list of em,gm,invleft,rlgm");
    cw->add_option("--norm", weigh.norm, "sum1 or sum100 (default sum100)");
    cw->add_option("--json", weigh.json_out, "Write the full report to this JSON file");
    weigh.ri.attach(cw);

    AuditArgs audit;
    auto* ca = app.add_subcommand("audit", "Run property audits over one or more matrices");
    ca->add_option("matrices", audit.matrix_files, "Matrix files")->required();
    ca->add_option("--property", audit.property,
                   "asymmetry, group, scale, monotonic, efficiency, or all")
        ->required();
    ca->add_option("--method", audit.method, "Weighting method (default em)");
    ca->add_option("--alpha-grid", audit.alpha_grid,
                   "Exponent grid: comma list or lo:hi:step (default 0.5,1,2,3,4,5)");
    ca->add_option("--entry", audit.entry, "Entry I,J for the monotonicity audit (1-based)");
    ca->add_option("--factor", audit.factor, "Multiply the entry by this factor (> 1)");
    ca->add_flag("--scale-step", audit.scale_step,
                 "Step the entry to the next scale value (default)");
    ca->add_option("--group-weights", audit.group_weights, "Comma list, sums to 1");
    ca->add_option("--out", audit.out_dir, "Write audits.jsonl, summary.csv, manifest.json here");
    ca->add_option("--tie-tol", audit.tie_tol, "Relative tie tolerance for rankings");
    audit.ri.attach(ca);

    SimulateArgs sim;
    auto* cs = app.add_subcommand("simulate", "Run a seeded Monte Carlo study from a spec file");
    cs->add_option("spec", sim.spec_file, "Experiment spec JSON")->required();
    cs->add_option("--out", sim.out_dir, "Output directory (default .)");
    sim.ri.attach(cs);

    RiArgs ri;
    auto* cr = app.add_subcommand("ri", "Estimate random indices and fill the cache");
    cr->add_option("--n", ri.orders, "Comma list of matrix orders (default 3..9)");
    cr->add_option("--trials", ri.trials, "Monte Carlo trials per order");
    cr->add_option("--seed", ri.seed, "Stream seed");
    cr->add_option("--cache", ri.cache_dir, "Cache directory");
    cr->add_option("--threads", ri.threads, "Worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cw->parsed()) return cmd_weigh(weigh);
        if (ca->parsed()) return cmd_audit(audit);
        if (cs->parsed()) return cmd_simulate(sim);
        if (cr->parsed()) return cmd_ri(ri);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
