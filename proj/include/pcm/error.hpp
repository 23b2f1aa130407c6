#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pcm {

enum class errc {
    non_square,
    non_positive_entry,
    reciprocity_violation,
    diagonal_not_one,
    order_too_small,
    order_too_large,
    non_positive_weight,
    non_positive_exponent,
    not_on_scale,
    no_convergence,
    length_mismatch,
    normalization_mismatch,
    size_mismatch,
    missing_ri,
    degenerate_entry,
    parse_error,
    io_error,
    overflow,
    invalid_spec,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// Carries the best iterate so callers can inspect how close the solve got.
class NoConvergence : public Error {
public:
    NoConvergence(std::string what, std::vector<double> best, double residual, int iterations)
        : Error(errc::no_convergence, std::move(what)),
          best_iterate(std::move(best)),
          residual(residual),
          iterations(iterations) {}

    std::vector<double> best_iterate;
    double residual;
    int iterations;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_square: return "NonSquare";
        case errc::non_positive_entry: return "NonPositiveEntry";
        case errc::reciprocity_violation: return "ReciprocityViolation";
        case errc::diagonal_not_one: return "DiagonalNotOne";
        case errc::order_too_small: return "OrderTooSmall";
        case errc::order_too_large: return "OrderTooLarge";
        case errc::non_positive_weight: return "NonPositiveWeight";
        case errc::non_positive_exponent: return "NonPositiveExponent";
        case errc::not_on_scale: return "NotOnScale";
        case errc::no_convergence: return "NoConvergence";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::normalization_mismatch: return "NormalizationMismatch";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::missing_ri: return "MissingRI";
        case errc::degenerate_entry: return "DegenerateEntry";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IoError";
        case errc::overflow: return "Overflow";
        case errc::invalid_spec: return "InvalidSpec";
    }
    return "UnknownError";
}

}  // namespace pcm
