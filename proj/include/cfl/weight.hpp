#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cfl/classical.hpp"
#include "cfl/formula.hpp"
#include "cfl/polynomial.hpp"
#include "cfl/rational.hpp"

namespace cfl {

// Default upper bound on the atom count for symbolic expansion.
inline constexpr std::size_t kDefaultSymbolicCap = 12;

// Weight of truth per atom. The weight of a negated atom is derived
// (1 - w), never stored.
class WeightAssignment {
public:
    WeightAssignment() = default;
    WeightAssignment(std::initializer_list<std::pair<const std::string, Weight>> values) : values_(values) {}

    void set(const std::string& atom, Weight w) { values_.insert_or_assign(atom, std::move(w)); }
    bool contains(const std::string& atom) const { return values_.count(atom) != 0; }
    // Throws BindingError naming the atom when unassigned.
    const Weight& at(const std::string& atom) const;

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

private:
    std::map<std::string, Weight> values_;
};

// Sum over the true rows of f's truth table of the product, over atoms, of
// w(atom) where the row bit is 1 and 1 - w(atom) where it is 0. Exact.
// Throws BindingError for an unassigned atom, CapExceeded past `cap` atoms.
Weight weight(const Formula& f, const WeightAssignment& w, std::size_t cap = kDefaultAtomCap);

// Closed-form connective weights:
//   NOT  1 - a            AND  a*b
//   OR   a + b - a*b      IMP  1 - a + a*b
//   IFF  1 - a - b + 2*a*b
// These agree with weight() only when the operands share no atoms. `b` must
// be absent for NOT and present otherwise (ArgumentError).
Weight connective_weight(Connective kind, const Weight& a, const std::optional<Weight>& b = std::nullopt);
// Same, validating raw operands; throws RangeError outside [0, 1].
Weight connective_weight(Connective kind, const Rational& a, const std::optional<Rational>& b = std::nullopt);

// The canonical multilinear polynomial P over atom_list(f) with
// P(w) = weight(f, w) for every assignment.
MultilinearPoly symbolic_weight(const Formula& f, std::size_t cap = kDefaultSymbolicCap);

// Exact evaluation; throws BindingError for an unassigned variable and
// RangeError if the value leaves [0, 1] (impossible for weight polynomials).
Weight poly_eval(const MultilinearPoly& p, const WeightAssignment& w);

// Weight identically 1 / identically 0.
bool is_cfl_tautology(const Formula& f, std::size_t cap = kDefaultSymbolicCap);
bool is_cfl_contradiction(const Formula& f, std::size_t cap = kDefaultSymbolicCap);

}  // namespace cfl
