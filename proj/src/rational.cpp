#include "cfl/rational.hpp"

#include <cctype>

#include "cfl/error.hpp"

namespace cfl {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer to_integer(std::string_view digits) {
    Integer out = 0;
    for (char c : digits) out = out * 10 + (c - '0');
    return out;
}

Integer pow10(std::size_t k) {
    Integer out = 1;
    for (std::size_t i = 0; i < k; ++i) out *= 10;
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view original = text;
    auto fail = [&](const char* why) -> Rational {
        throw SyntaxError(std::string(why) + " in number '" + std::string(original) + "'", 0);
    };
    if (text.empty()) return fail("empty");

    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den))
            return fail("malformed fraction");
        Integer d = to_integer(den);
        if (d == 0) return fail("zero denominator");
        value = Rational(to_integer(num), d);
    } else {
        auto dot = text.find('.');
        auto whole = text.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
        if (whole.empty() && frac.empty()) return fail("no digits");
        if (!all_digits(whole) || !all_digits(frac)) return fail("malformed decimal");
        Integer scaled = to_integer(whole) * pow10(frac.size()) + to_integer(frac);
        value = Rational(scaled, pow10(frac.size()));
    }
    return negative ? Rational(-value) : value;
}

std::string format_exact(const Rational& value) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;

    Integer num = numerator(value);
    Integer den = denominator(value);

    Integer rest = den;
    std::size_t twos = 0, fives = 0;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }
    if (rest != 1) return num.str() + "/" + den.str();

    const std::size_t places = std::max(twos, fives);
    if (places == 0) return num.str();

    const bool negative = num < 0;
    if (negative) num = -num;
    Integer scaled = num * (pow10(places) / den);
    std::string digits = scaled.str();
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    std::string out = digits.substr(0, digits.size() - places) + "." + digits.substr(digits.size() - places);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return negative ? "-" + out : out;
}

Weight::Weight(Rational value) : value_(std::move(value)) {
    if (value_ < 0 || value_ > 1)
        throw RangeError("weight " + format_exact(value_) + " is outside [0, 1]");
}

Weight Weight::complement() const { return Weight(Rational(1) - value_); }

}  // namespace cfl
