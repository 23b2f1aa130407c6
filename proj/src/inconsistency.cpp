#include "pcm/inconsistency.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>
#include <vector>

#include "json.hpp"
#include "pcm/rng.hpp"

namespace pcm {

namespace {

using nlohmann::json;

double pairwise_sum(const double* x, size_t len) {
    if (len <= 64) {
        double s = 0.0;
        for (size_t i = 0; i < len; ++i) s += x[i];
        return s;
    }
    size_t half = len / 2;
    return pairwise_sum(x, half) + pairwise_sum(x + half, len - half);
}

const std::array<double, 17>& scale_doubles() {
    static const std::array<double, 17> values = [] {
        std::array<double, 17> v{};
        for (int k = 0; k < 17; ++k) v[k] = saaty_scale()[k].to_double();
        return v;
    }();
    return values;
}

/// Same draw order as generators' saaty_uniform: upper triangle, row major.
void fill_saaty(double* a, int n, rng::Stream& stream) {
    const auto& scale = scale_doubles();
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // The scale is symmetric, so position 16-k holds the exact reciprocal. Using it
            // keeps this buffer bit-identical to the matrices saaty_uniform hands out.
            int k = static_cast<int>(stream.below(17));
            a[static_cast<size_t>(i) * n + j] = scale[k];
            a[static_cast<size_t>(j) * n + i] = scale[16 - k];
        }
    }
}

}  // namespace

double consistency_index(const Pcm& a, double tol, int max_iter) {
    int n = a.n();
    if (n == 2) return 0.0;
    double lambda = right_eigenvector(a, tol, max_iter).lambda_max;
    double ci = (lambda - n) / (n - 1);
    if (ci < 0.0 && ci > -1e-9) ci = 0.0;
    return ci;
}

RiEstimate estimate_random_index(int n, std::uint64_t trials, std::uint64_t seed, int threads) {
    if (n < 3) throw Error(errc::order_too_small, "random index needs n >= 3");
    if (trials == 0) throw Error(errc::invalid_spec, "random index needs at least one trial");
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    std::vector<double> ci(trials);
    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<double> a(static_cast<size_t>(n) * n), w(n), scratch(n);
        for (std::uint64_t t = lo; t < hi; ++t) {
            rng::Stream stream(seed, {rng::kRiTrial, static_cast<std::uint64_t>(n), t});
            fill_saaty(a.data(), n, stream);
            std::fill(w.begin(), w.end(), 1.0 / n);
            double lambda = 0.0, residual = 0.0;
            int iters = 0;
            detail::power_iterate(a.data(), n, kEigenTol, kEigenMaxIter, w.data(),
                                  scratch.data(), lambda, iters, residual);
            ci[t] = (lambda - n) / (n - 1);
        }
    };
    if (threads == 1 || trials < 4096) {
        worker(0, trials);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (trials + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t lo = chunk * t;
            if (lo >= trials) break;
            pool.emplace_back(worker, lo, std::min(trials, lo + chunk));
        }
        for (auto& th : pool) th.join();
    }
    double mean = pairwise_sum(ci.data(), ci.size()) / static_cast<double>(trials);
    std::vector<double> sq(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        double d = ci[t] - mean;
        sq[t] = d * d;
    }
    double var = trials > 1
                     ? pairwise_sum(sq.data(), sq.size()) / static_cast<double>(trials - 1)
                     : 0.0;
    RiEstimate e;
    e.n = n;
    e.ri = mean;
    e.stderr_ = std::sqrt(var / static_cast<double>(trials));
    e.trials = trials;
    e.seed = seed;
    return e;
}

std::string default_ri_cache_dir() {
    if (const char* env = std::getenv("PCM_RI_CACHE")) return env;
    return ".pcm-ri-cache";
}

RiEstimate read_ri_cache_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(errc::parse_error, path + ": " + e.what());
    }
    RiEstimate e;
    try {
        e.n = doc.at("n").get<int>();
        e.ri = doc.at("ri").get<double>();
        e.trials = doc.at("trials").get<std::uint64_t>();
        e.seed = std::stoull(doc.at("seed").get<std::string>());
        e.stderr_ = doc.at("stderr").get<double>();
    } catch (const json::exception& ex) {
        throw Error(errc::parse_error, path + ": " + ex.what());
    }
    return e;
}

std::string ri_cache_file_name(int n, std::uint64_t trials, std::uint64_t seed) {
    return "ri_n" + std::to_string(n) + "_t" + std::to_string(trials) + "_s" +
           std::to_string(seed) + ".json";
}

void write_ri_cache_file(const RiEstimate& e, const std::string& path) {
    json doc;
    doc["n"] = e.n;
    doc["ri"] = e.ri;
    doc["trials"] = e.trials;
    doc["seed"] = std::to_string(e.seed);
    doc["stderr"] = e.stderr_;
    std::ofstream out(path);
    if (!out) throw Error(errc::io_error, "cannot write " + path);
    out << doc.dump(2) << "\n";
}

RiTable RiTable::estimated(std::uint64_t trials, std::uint64_t seed, std::string cache_dir) {
    RiTable t;
    t.estimated_ = true;
    t.trials_ = trials;
    t.seed_ = seed;
    t.cache_dir_ = std::move(cache_dir);
    return t;
}

RiTable RiTable::user(std::map<int, double> values) {
    RiTable t;
    t.estimated_ = false;
    t.user_values_ = std::move(values);
    return t;
}

RiEstimate RiTable::estimate_for(int n) const {
    if (!estimated_) throw Error(errc::missing_ri, "table is user-supplied, no estimate metadata");
    std::lock_guard<std::mutex> lock(*mutex_);
    auto hit = memo_->find(n);
    if (hit != memo_->end()) return hit->second;
    std::string file = cache_dir_ + "/" + ri_cache_file_name(n, trials_, seed_);
    std::error_code ec;
    if (std::filesystem::exists(file, ec)) {
        RiEstimate e = read_ri_cache_file(file);
        if (e.n == n && e.trials == trials_ && e.seed == seed_) {
            (*memo_)[n] = e;
            return e;
        }
    }
    RiEstimate e = estimate_random_index(n, trials_, seed_);
    std::filesystem::create_directories(cache_dir_, ec);
    write_ri_cache_file(e, file);
    (*memo_)[n] = e;
    return e;
}

double RiTable::ri_for(int n) const {
    if (estimated_) return estimate_for(n).ri;
    auto hit = user_values_.find(n);
    if (hit == user_values_.end()) {
        throw Error(errc::missing_ri, "user table has no RI for n=" + std::to_string(n));
    }
    return hit->second;
}

InconsistencyReport consistency_ratio(const Pcm& a, const RiTable& table, double tol,
                                      int max_iter) {
    int n = a.n();
    if (n < 3) throw Error(errc::order_too_small, "consistency ratio needs n >= 3");
    InconsistencyReport r;
    r.lambda_max = right_eigenvector(a, tol, max_iter).lambda_max;
    r.ci = (r.lambda_max - n) / (n - 1);
    if (r.ci < 0.0 && r.ci > -1e-9) r.ci = 0.0;
    r.ri = table.ri_for(n);
    r.cr = r.ci / r.ri;
    r.acceptable = r.cr < 0.1;
    r.ri_estimated = table.is_estimated();
    if (r.ri_estimated) {
        r.ri_trials = table.trials();
        r.ri_seed = table.seed();
    }
    return r;
}

}  // namespace pcm
