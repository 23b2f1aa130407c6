#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pcm/error.hpp"

namespace pcm {

// Exact rational with canonical form: den > 0, gcd(|num|, den) = 1.
// Intermediates run through __int128; anything that would leave int64 throws Overflow.
// Matrix entries are always positive, but the type itself allows any sign so that
// arithmetic stays unsurprising.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    // Explicit so that a braced grid of doubles cannot reach the exact validate
    // overload through the double-to-int64 narrowing sequence.
    explicit Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool positive() const { return num_ > 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Rational reciprocal() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;  // "3" or "1/3"

    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Accepts "7", "-3", "22/7"; whitespace-free. Returns nullopt on anything else.
    static std::optional<Rational> parse(std::string_view text);

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace pcm
