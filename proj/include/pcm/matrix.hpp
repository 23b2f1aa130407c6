#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pcm/error.hpp"
#include "pcm/rational.hpp"

namespace pcm {

class Pcm;

namespace detail {
// Internal factories for code that builds reciprocal grids directly (generators,
// matrix transforms). They trust the caller to supply a_ii = 1 and a_ji = 1/a_ij
// up to floating noise and skip the public validation pass.
Pcm make_floating(int n, std::vector<double> vals);
Pcm make_exact(int n, std::vector<Rational> rats);
}  // namespace detail

enum class EntryKind { exact, floating };

// Positive reciprocal square matrix. Exact mode keeps rational entries (the double view is
// always populated alongside); floating mode holds doubles only. Instances are immutable;
// construction goes through validate/from_weights so every Pcm in the program satisfies
// a_ii = 1 and a_ji = 1/a_ij.
class Pcm {
public:
    int n() const { return n_; }
    EntryKind kind() const { return kind_; }
    bool exact() const { return kind_ == EntryKind::exact; }

    double at(int i, int j) const { return vals_[static_cast<size_t>(i) * n_ + j]; }
    const Rational& rat(int i, int j) const;
    const std::vector<double>& values() const { return vals_; }

    static constexpr int kMaxOrder = 64;

private:
    Pcm(int n, EntryKind kind, std::vector<double> vals, std::vector<Rational> rats)
        : n_(n), kind_(kind), vals_(std::move(vals)), rats_(std::move(rats)) {}

    int n_;
    EntryKind kind_;
    std::vector<double> vals_;
    std::vector<Rational> rats_;  // empty in floating mode

    friend Pcm validate(const std::vector<std::vector<double>>& grid, double tolerance);
    friend Pcm validate(const std::vector<std::vector<Rational>>& grid);
    friend Pcm from_weights(const std::vector<double>& w);
    friend Pcm from_weights(const std::vector<Rational>& w);
    friend Pcm transpose(const Pcm& a);
    friend Pcm hadamard_power(const Pcm& a, double alpha);
    friend Pcm detail::make_floating(int n, std::vector<double> vals);
    friend Pcm detail::make_exact(int n, std::vector<Rational> rats);
};

// The 17 judgment values 1/9, 1/8, ..., 1/2, 1, 2, ..., 9 in ascending order.
const std::array<Rational, 17>& saaty_scale();

// Position of an exact scale member, or nullopt for off-scale values.
std::optional<int> saaty_position(const Rational& v);

// Scale position nearest to v in log space (v > 0).
int nearest_saaty_position(double v);

struct TriadCensus {
    int intransitive_count = 0;
    // n(n^2-4)/24 for even n; the odd-n maximum is left unspecified.
    std::optional<int> max_possible;
};

// Floating-grid validation. Reciprocity errors up to `tolerance` (measured as
// |a_ij*a_ji - 1|) are repaired by geometric symmetrization g = sqrt(a_ij/a_ji);
// larger errors are rejected. Pairs already reciprocal to a few ulps are kept
// verbatim, which makes serialize/parse cycles byte-stable.
Pcm validate(const std::vector<std::vector<double>>& grid, double tolerance = 1e-9);

// Exact-grid validation: reciprocity and unit diagonal must hold exactly.
Pcm validate(const std::vector<std::vector<Rational>>& grid);

// Consistent matrix a_ij = w_i/w_j.
Pcm from_weights(const std::vector<double>& w);
Pcm from_weights(const std::vector<Rational>& w);

// Multiplicative transitivity a_ik = a_ij*a_jk on every triple; exact equality in exact
// mode, relative tolerance in floating mode.
bool is_consistent(const Pcm& a, double tolerance = 1e-9);

Pcm transpose(const Pcm& a);

// Entrywise power; exponent must be positive. alpha = 1 preserves exactness, any other
// exponent yields a floating matrix.
Pcm hadamard_power(const Pcm& a, double alpha);

// Ordinal cycles under the "a_ij > 1 means i beats j" relation; a triad containing a tie
// (a_ij = 1 off the diagonal) cannot form a strict cycle and counts as transitive.
TriadCensus count_intransitive_triads(const Pcm& a);

}  // namespace pcm
