#include "cfl/polynomial.hpp"

#include <bit>
#include <set>
#include <unordered_set>

#include "cfl/error.hpp"
#include "cfl/weight.hpp"

namespace cfl {

bool GradedLexLess::operator()(Monomial a, Monomial b) const noexcept {
    const int da = std::popcount(a);
    const int db = std::popcount(b);
    if (da != db) return da < db;
    while (a != b) {
        const int la = std::countr_zero(a);
        const int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

MultilinearPoly::MultilinearPoly(std::vector<std::string> variables, const std::map<Monomial, Rational>& terms)
    : variables_(std::move(variables)) {
    if (variables_.size() > 64) throw ArgumentError("at most 64 polynomial variables are supported");
    std::unordered_set<std::string> seen;
    for (const auto& v : variables_)
        if (!seen.insert(v).second) throw ArgumentError("duplicate polynomial variable '" + v + "'");
    const Monomial valid = variables_.size() == 64 ? ~Monomial{0} : (Monomial{1} << variables_.size()) - 1;
    for (const auto& [m, c] : terms) {
        if ((m & ~valid) != 0) throw ArgumentError("monomial refers to a missing variable");
        if (c != 0) terms_.emplace(m, c);
    }
}

MultilinearPoly MultilinearPoly::constant(const Rational& c, std::vector<std::string> variables) {
    return MultilinearPoly(std::move(variables), {{Monomial{0}, c}});
}

Rational MultilinearPoly::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool MultilinearPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational MultilinearPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != variables_.size())
        throw ArgumentError("evaluation point has " + std::to_string(point.size()) + " values for " +
                            std::to_string(variables_.size()) + " variables");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (Monomial rest = m; rest != 0; rest &= rest - 1) term *= point[std::countr_zero(rest)];
        sum += term;
    }
    return sum;
}

Rational MultilinearPoly::evaluate(const WeightAssignment& w) const {
    std::vector<Rational> point;
    point.reserve(variables_.size());
    for (const auto& v : variables_) point.push_back(w.at(v).value());
    return evaluate(point);
}

std::string MultilinearPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string factors;
        for (Monomial rest = m; rest != 0; rest &= rest - 1) {
            if (!factors.empty()) factors += '*';
            factors += variables_[std::countr_zero(rest)];
        }
        if (factors.empty())
            out += format_exact(magnitude);
        else if (magnitude == 1)
            out += factors;
        else
            out += format_exact(magnitude) + "*" + factors;
    }
    return out;
}

namespace {

std::map<std::set<std::string>, Rational> by_name(const MultilinearPoly& p) {
    std::map<std::set<std::string>, Rational> out;
    for (const auto& [m, c] : p.terms()) {
        std::set<std::string> names;
        for (Monomial rest = m; rest != 0; rest &= rest - 1) names.insert(p.variables()[std::countr_zero(rest)]);
        out.emplace(std::move(names), c);
    }
    return out;
}

}  // namespace

bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
    if (a.variables_ == b.variables_) return a.terms_ == b.terms_;
    return by_name(a) == by_name(b);
}

}  // namespace cfl
