#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cfl/rational.hpp"

namespace cfl {

class WeightAssignment;

// A set of variables; bit i stands for variables()[i] of the owning polynomial.
using Monomial = std::uint64_t;

// Graded lexicographic order: lower degree first, then the sorted index
// lists compared lexicographically ({0,1} < {0,2} < {1,2}).
struct GradedLexLess {
    bool operator()(Monomial a, Monomial b) const noexcept;
};

// Polynomial of degree at most one in each variable, with exact rational
// coefficients. Zero coefficients are never stored.
class MultilinearPoly {
public:
    using Terms = std::map<Monomial, Rational, GradedLexLess>;

    MultilinearPoly() = default;
    // Throws ArgumentError on duplicate names, more than 64 variables, or a
    // monomial mentioning a variable index that does not exist.
    MultilinearPoly(std::vector<std::string> variables, const std::map<Monomial, Rational>& terms);

    static MultilinearPoly constant(const Rational& c, std::vector<std::string> variables = {});

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const Terms& terms() const noexcept { return terms_; }

    Rational coefficient(Monomial m) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational constant_term() const { return coefficient(0); }

    // point[i] is the value of variables()[i].
    Rational evaluate(std::span<const Rational> point) const;
    // Throws BindingError for an unassigned variable.
    Rational evaluate(const WeightAssignment& w) const;

    // e.g. "1 - q1 + q1*q2", "1/2*a - b"; the zero polynomial is "0".
    std::string to_string() const;

    // Equal iff the two term mappings agree as maps from sets of variable
    // names to coefficients; variable order does not matter.
    friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b);

private:
    std::vector<std::string> variables_;
    Terms terms_;
};

}  // namespace cfl
