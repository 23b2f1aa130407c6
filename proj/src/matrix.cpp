#include "pcm/matrix.hpp"

#include <cmath>
#include <limits>

namespace pcm {

namespace {

void check_order(size_t n) {
    if (n < 2) throw Error(errc::order_too_small, "matrix order must be at least 2");
    if (n > Pcm::kMaxOrder) {
        throw Error(errc::order_too_large,
                    "matrix order " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(Pcm::kMaxOrder));
    }
}

std::string cell(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Pcm detail::make_floating(int n, std::vector<double> vals) {
    check_order(size_t(n));
    return Pcm(n, EntryKind::floating, std::move(vals), {});
}

Pcm detail::make_exact(int n, std::vector<Rational> rats) {
    check_order(size_t(n));
    std::vector<double> vals(rats.size());
    for (size_t k = 0; k < rats.size(); ++k) vals[k] = rats[k].to_double();
    return Pcm(n, EntryKind::exact, std::move(vals), std::move(rats));
}

const Rational& Pcm::rat(int i, int j) const {
    if (!exact()) throw Error(errc::parse_error, "rational access on a floating matrix");
    return rats_[static_cast<size_t>(i) * n_ + j];
}

const std::array<Rational, 17>& saaty_scale() {
    static const std::array<Rational, 17> scale = [] {
        std::array<Rational, 17> s{};
        for (int k = 0; k < 8; ++k) s[k] = Rational(1, 9 - k);
        for (int k = 8; k < 17; ++k) s[k] = Rational(k - 7);
        return s;
    }();
    return scale;
}

std::optional<int> saaty_position(const Rational& v) {
    const auto& scale = saaty_scale();
    for (int k = 0; k < 17; ++k) {
        if (scale[k] == v) return k;
    }
    return std::nullopt;
}

int nearest_saaty_position(double v) {
    const auto& scale = saaty_scale();
    double lv = std::log(v);
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 17; ++k) {
        double d = std::fabs(lv - std::log(scale[k].to_double()));
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

Pcm validate(const std::vector<std::vector<double>>& grid, double tolerance) {
    size_t n = grid.size();
    for (const auto& row : grid) {
        if (row.size() != n) throw Error(errc::non_square, "row length differs from row count");
    }
    check_order(n);
    std::vector<double> vals(n * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            double v = grid[i][j];
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw Error(errc::non_positive_entry,
                            "entry " + cell(int(i), int(j)) + " is not a positive finite number");
            }
            vals[i * n + j] = v;
        }
    }
    for (size_t i = 0; i < n; ++i) {
        if (std::fabs(vals[i * n + i] - 1.0) > tolerance) {
            throw Error(errc::diagonal_not_one, "entry " + cell(int(i), int(i)) + " must be 1");
        }
        vals[i * n + i] = 1.0;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            double err = std::fabs(vals[i * n + j] * vals[j * n + i] - 1.0);
            if (err > tolerance) {
                throw Error(errc::reciprocity_violation,
                            "entries " + cell(int(i), int(j)) + "/" + cell(int(j), int(i)) +
                                " have reciprocity error " + std::to_string(err));
            }
            // Pairs whose product is 1 up to a few ulps are kept verbatim so that
            // serialize/parse cycles are byte-stable; repair only genuine drift.
            if (err > 8.0 * std::numeric_limits<double>::epsilon()) {
                double g = std::sqrt(vals[i * n + j] / vals[j * n + i]);
                vals[i * n + j] = g;
                vals[j * n + i] = 1.0 / g;
            }
        }
    }
    return Pcm(int(n), EntryKind::floating, std::move(vals), {});
}

Pcm validate(const std::vector<std::vector<Rational>>& grid) {
    size_t n = grid.size();
    check_order(n);
    for (const auto& row : grid) {
        if (row.size() != n) throw Error(errc::non_square, "row length differs from row count");
    }
    std::vector<Rational> rats(n * n);
    std::vector<double> vals(n * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const Rational& v = grid[i][j];
            if (!v.positive()) {
                throw Error(errc::non_positive_entry,
                            "entry " + cell(int(i), int(j)) + " is not positive");
            }
            rats[i * n + j] = v;
            vals[i * n + j] = v.to_double();
        }
    }
    for (size_t i = 0; i < n; ++i) {
        if (!rats[i * n + i].is_one()) {
            throw Error(errc::diagonal_not_one, "entry " + cell(int(i), int(i)) + " must be 1");
        }
        for (size_t j = i + 1; j < n; ++j) {
            if (rats[i * n + j].reciprocal() != rats[j * n + i]) {
                throw Error(errc::reciprocity_violation,
                            "entries " + cell(int(i), int(j)) + "/" + cell(int(j), int(i)) +
                                " are not exact reciprocals");
            }
        }
    }
    return Pcm(int(n), EntryKind::exact, std::move(vals), std::move(rats));
}

Pcm from_weights(const std::vector<double>& w) {
    size_t n = w.size();
    check_order(n);
    for (double v : w) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw Error(errc::non_positive_weight, "weights must be positive finite numbers");
        }
    }
    std::vector<double> vals(n * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) vals[i * n + j] = w[i] / w[j];
    }
    return Pcm(int(n), EntryKind::floating, std::move(vals), {});
}

Pcm from_weights(const std::vector<Rational>& w) {
    size_t n = w.size();
    check_order(n);
    for (const Rational& v : w) {
        if (!v.positive()) throw Error(errc::non_positive_weight, "weights must be positive");
    }
    std::vector<Rational> rats(n * n);
    std::vector<double> vals(n * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            rats[i * n + j] = w[i] / w[j];
            vals[i * n + j] = rats[i * n + j].to_double();
        }
    }
    return Pcm(int(n), EntryKind::exact, std::move(vals), std::move(rats));
}

bool is_consistent(const Pcm& a, double tolerance) {
    int n = a.n();
    if (a.exact()) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    if (a.rat(i, j) * a.rat(j, k) != a.rat(i, k)) return false;
                }
            }
        }
        return true;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (std::fabs(a.at(i, j) * a.at(j, k) / a.at(i, k) - 1.0) > tolerance) {
                    return false;
                }
            }
        }
    }
    return true;
}

Pcm transpose(const Pcm& a) {
    int n = a.n();
    std::vector<double> vals(size_t(n) * n);
    std::vector<Rational> rats;
    if (a.exact()) rats.resize(size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            vals[size_t(j) * n + i] = a.at(i, j);
            if (a.exact()) rats[size_t(j) * n + i] = a.rat(i, j);
        }
    }
    return Pcm(n, a.kind(), std::move(vals), std::move(rats));
}

Pcm hadamard_power(const Pcm& a, double alpha) {
    if (!(alpha > 0.0)) throw Error(errc::non_positive_exponent, "exponent must be positive");
    if (alpha == 1.0) return a;
    int n = a.n();
    std::vector<double> vals(size_t(n) * n, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            vals[size_t(i) * n + j] = std::pow(a.at(i, j), alpha);
        }
    }
    // Powers of reciprocal pairs drift apart only in the last bits; resymmetrize.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            vals[size_t(j) * n + i] = 1.0 / vals[size_t(i) * n + j];
        }
    }
    return Pcm(n, EntryKind::floating, std::move(vals), {});
}

TriadCensus count_intransitive_triads(const Pcm& a) {
    int n = a.n();
    auto rel = [&](int i, int j) -> int {
        if (a.exact()) {
            const Rational& r = a.rat(i, j);
            if (r.is_one()) return 0;
            return r > Rational(1) ? 1 : -1;
        }
        double v = a.at(i, j);
        if (v == 1.0) return 0;
        return v > 1.0 ? 1 : -1;
    };
    TriadCensus census;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int sij = rel(i, j);
            if (sij == 0) continue;
            for (int k = j + 1; k < n; ++k) {
                int sjk = rel(j, k);
                int ski = rel(k, i);
                // A strict 3-cycle in either orientation has all three signs equal.
                if (sij == sjk && sjk == ski) ++census.intransitive_count;
            }
        }
    }
    if (n % 2 == 0) census.max_possible = n * (n * n - 4) / 24;
    return census;
}

}  // namespace pcm
