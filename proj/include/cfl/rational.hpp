#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cfl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "0.4", ".25", "-1.5" or "2/5" into an exact, reduced rational.
// Throws SyntaxError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

// Exact decimal when the reduced denominator is 2^a * 5^b, else "num/den".
std::string format_exact(const Rational& value);

// A weight (degree) of truth: an exact rational in [0, 1].
class Weight {
public:
    Weight() = default;  // 0
    explicit Weight(Rational value);

    static Weight zero() { return Weight(); }
    static Weight one() { return Weight(Rational(1)); }
    static Weight parse(std::string_view text) { return Weight(parse_rational(text)); }

    const Rational& value() const noexcept { return value_; }

    // w(!q) = 1 - w(q)
    Weight complement() const;

    std::string to_string() const { return format_exact(value_); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational value_{0};
};

}  // namespace cfl
