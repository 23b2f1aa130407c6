#include "pcm/generators.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "pcm/inconsistency.hpp"
#include "pcm/weighting.hpp"

namespace pcm {

namespace {

void check_gen_order(int n) {
    if (n < 3) throw Error(errc::order_too_small, "generators need n >= 3");
    if (n > Pcm::kMaxOrder) throw Error(errc::order_too_large, "order exceeds the matrix cap");
}

std::vector<std::pair<int, int>> upper_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

}  // namespace

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::saaty_uniform: return "saaty_uniform";
        case Scheme::consistent_perturbed: return "consistent_perturbed";
        case Scheme::unit_interval_ratio: return "unit_interval_ratio";
        case Scheme::ishizaka_lusti: return "ishizaka_lusti";
    }
    return "unknown";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "saaty_uniform") return Scheme::saaty_uniform;
    if (name == "consistent_perturbed") return Scheme::consistent_perturbed;
    if (name == "unit_interval_ratio") return Scheme::unit_interval_ratio;
    if (name == "ishizaka_lusti") return Scheme::ishizaka_lusti;
    throw Error(errc::invalid_spec, "unknown scheme name \"" + name + "\"");
}

Pcm saaty_uniform(int n, rng::Stream& stream) {
    check_gen_order(n);
    const auto& scale = saaty_scale();
    std::vector<Rational> rats(static_cast<size_t>(n) * n, Rational(1));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int k = static_cast<int>(stream.below(17));
            rats[static_cast<size_t>(i) * n + j] = scale[k];
            rats[static_cast<size_t>(j) * n + i] = scale[16 - k];
        }
    }
    return detail::make_exact(n, std::move(rats));
}

Pcm saaty_uniform(int n, std::uint64_t seed) {
    rng::Stream stream(seed, {rng::kGenSaaty, static_cast<std::uint64_t>(n)});
    return saaty_uniform(n, stream);
}

Pcm consistent_perturbed(int n, double delta, rng::Stream& stream) {
    check_gen_order(n);
    if (!(delta >= 0.0) || !std::isfinite(delta)) {
        throw Error(errc::invalid_spec, "noise half-width must be a nonnegative finite number");
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = stream.uniform(1.0, 9.0);
    std::vector<double> vals(static_cast<size_t>(n) * n, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // Noise lands on whichever entry of the pair is >= 1.
            bool upper = w[i] >= w[j];
            double a = upper ? w[i] / w[j] : w[j] / w[i];
            double t;
            do {
                double e = stream.uniform(-delta, delta);
                t = a + e >= 1.0 ? a + e : 1.0 / (1.0 - e - (a - 1.0));
            } while (!(t > 0.0) || !std::isfinite(t));
            size_t hi = upper ? static_cast<size_t>(i) * n + j : static_cast<size_t>(j) * n + i;
            size_t lo = upper ? static_cast<size_t>(j) * n + i : static_cast<size_t>(i) * n + j;
            vals[hi] = t;
            vals[lo] = 1.0 / t;
        }
    }
    return detail::make_floating(n, std::move(vals));
}

Pcm consistent_perturbed(int n, double delta, std::uint64_t seed) {
    rng::Stream stream(seed, {rng::kGenConsistentPerturbed, static_cast<std::uint64_t>(n)});
    return consistent_perturbed(n, delta, stream);
}

Pcm unit_interval_ratio(int n, rng::Stream& stream) {
    check_gen_order(n);
    std::vector<double> vals(static_cast<size_t>(n) * n, 1.0);
    auto draw = [&stream] {
        double c;
        do {
            c = stream.next_unit();
        } while (c == 0.0);
        return c;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double cij = draw();
            double cji = draw();
            vals[static_cast<size_t>(i) * n + j] = cij / cji;
            vals[static_cast<size_t>(j) * n + i] = cji / cij;
        }
    }
    return detail::make_floating(n, std::move(vals));
}

Pcm unit_interval_ratio(int n, std::uint64_t seed) {
    rng::Stream stream(seed, {rng::kGenUnitInterval, static_cast<std::uint64_t>(n)});
    return unit_interval_ratio(n, stream);
}

IshizakaDraw ishizaka_lusti(int n, rng::Stream& stream, double ri_n) {
    if (n < 3 || n > 7) {
        throw Error(errc::invalid_spec, "this scheme is defined for orders 3 through 7");
    }
    if (!(ri_n > 0.0) || !std::isfinite(ri_n)) {
        throw Error(errc::missing_ri, "a positive random-index value is required");
    }
    const auto& scale = saaty_scale();
    std::vector<Rational> rats(static_cast<size_t>(n) * n, Rational(1));
    auto set_pair = [&](int i, int j, const Rational& v) {
        rats[static_cast<size_t>(i) * n + j] = v;
        rats[static_cast<size_t>(j) * n + i] = v.reciprocal();
    };

    std::vector<Rational> step(n - 1);
    for (int k = 0; k + 1 < n; ++k) step[k] = scale[stream.below(17)];
    for (int i = 0; i < n; ++i) {
        Rational prod(1);
        for (int j = i + 1; j < n; ++j) {
            prod = prod * step[j - 1];
            set_pair(i, j, prod);
        }
    }

    auto pairs = upper_pairs(n);
    std::uint64_t count = stream.below(pairs.size() + 1);
    for (std::uint64_t t = 0; t < count; ++t) {
        auto [i, j] = pairs[stream.below(pairs.size())];
        const Rational& cur = rats[static_cast<size_t>(i) * n + j];
        int pos;
        if (auto exact_pos = saaty_position(cur)) {
            pos = *exact_pos;
        } else {
            // Products along the diagonal band can leave the scale; anchor the shift
            // window at the closest scale position in log space.
            pos = nearest_saaty_position(cur.to_double());
        }
        std::vector<int> candidates;
        for (int p = pos - 4; p <= pos + 4; ++p) {
            if (p >= 0 && p < 17 && p != pos) candidates.push_back(p);
        }
        std::uint64_t r = stream.below(9);
        if (r < candidates.size()) set_pair(i, j, scale[candidates[r]]);
    }

    IshizakaDraw out{detail::make_exact(n, std::move(rats))};
    out.lambda_max = right_eigenvector(out.matrix).lambda_max;
    double ci = (out.lambda_max - n) / (n - 1);
    if (ci < 0.0 && ci > -1e-9) ci = 0.0;
    out.cr = ci / ri_n;
    if (out.cr < 0.1) {
        out.group = std::min(4, static_cast<int>(out.cr / 0.02)) + 1;
    } else {
        out.dismissed = true;
    }
    return out;
}

IshizakaDraw ishizaka_lusti(int n, std::uint64_t seed, double ri_n) {
    rng::Stream stream(seed, {rng::kGenIshizakaLusti, static_cast<std::uint64_t>(n)});
    return ishizaka_lusti(n, stream, ri_n);
}

Pcm next_scale_step(const Pcm& a, int i, int j) {
    int n = a.n();
    if (i < 0 || j >= n || i >= j) {
        throw Error(errc::invalid_spec, "the stepped entry must lie above the diagonal");
    }
    const auto& scale = saaty_scale();
    if (a.exact()) {
        const Rational& v = a.rat(i, j);
        Rational next;
        if (auto pos = saaty_position(v)) {
            next = *pos == 16 ? Rational(10) : scale[*pos + 1];
        } else if (v == Rational(10)) {
            throw Error(errc::not_on_scale, "10 is the extension point and has no successor");
        } else {
            throw Error(errc::not_on_scale, "entry " + v.str() + " is not a scale value");
        }
        std::vector<Rational> rats(static_cast<size_t>(n) * n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) rats[static_cast<size_t>(r) * n + c] = a.rat(r, c);
        }
        rats[static_cast<size_t>(i) * n + j] = next;
        rats[static_cast<size_t>(j) * n + i] = next.reciprocal();
        return detail::make_exact(n, std::move(rats));
    }
    double v = a.at(i, j);
    double next = 0.0;
    bool found = false;
    for (int k = 0; k < 17 && !found; ++k) {
        double s = scale[k].to_double();
        if (std::fabs(v - s) <= 1e-12 * s) {
            next = k == 16 ? 10.0 : scale[k + 1].to_double();
            found = true;
        }
    }
    if (!found) {
        if (std::fabs(v - 10.0) <= 1e-11) {
            throw Error(errc::not_on_scale, "10 is the extension point and has no successor");
        }
        throw Error(errc::not_on_scale, "entry " + std::to_string(v) + " is not a scale value");
    }
    std::vector<double> vals = a.values();
    vals[static_cast<size_t>(i) * n + j] = next;
    vals[static_cast<size_t>(j) * n + i] = 1.0 / next;
    return detail::make_floating(n, std::move(vals));
}

}  // namespace pcm
