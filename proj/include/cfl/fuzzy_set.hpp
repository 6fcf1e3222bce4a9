#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfl/classical.hpp"
#include "cfl/formula.hpp"
#include "cfl/rational.hpp"
#include "cfl/weight.hpp"

namespace cfl {

// A finite, ordered list of distinct elements. Element order is the row
// order of every membership vector over the universe.
class Universe {
public:
    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::optional<std::size_t> index_of(std::string_view element) const;

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.name_ == b.name_ && a.elements_ == b.elements_;
    }

private:
    friend std::shared_ptr<const Universe> make_universe(std::string, std::vector<std::string>);
    Universe(std::string name, std::vector<std::string> elements);

    std::string name_;
    std::vector<std::string> elements_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// Throws ArgumentError for an empty element list, BindingError for a
// duplicate element.
UniversePtr make_universe(std::string name, std::vector<std::string> elements);

// Membership weight per element of a universe.
class FuzzySet {
public:
    const std::string& name() const noexcept { return name_; }
    const Universe& universe() const noexcept { return *universe_; }
    const UniversePtr& universe_ptr() const noexcept { return universe_; }
    std::span<const Weight> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    const Weight& operator[](std::size_t i) const { return weights_.at(i); }
    // Throws BindingError for an element outside the universe.
    const Weight& membership(std::string_view element) const;

    FuzzySet renamed(std::string name) const;

private:
    friend FuzzySet make_set(std::string, UniversePtr, std::vector<Weight>);
    FuzzySet(std::string name, UniversePtr u, std::vector<Weight> w)
        : name_(std::move(name)), universe_(std::move(u)), weights_(std::move(w)) {}

    std::string name_;
    UniversePtr universe_;
    std::vector<Weight> weights_;
};

// Throws ArgumentError when the weight count differs from the universe size.
FuzzySet make_set(std::string name, UniversePtr universe, std::vector<Weight> weights);
// Validating overload; throws RangeError for a weight outside [0, 1].
FuzzySet make_set(std::string name, UniversePtr universe, const std::vector<Rational>& weights);

FuzzySet universal_set(UniversePtr universe, std::string name = "U");
FuzzySet empty_set(UniversePtr universe, std::string name = "empty");

// Elementwise 1 - w. Named "(!<name>)".
FuzzySet complement(const FuzzySet& s);

enum class SetOp { Variable, Complement, Union, Intersection, Implication, Biimplication };

// Immutable expression over named fuzzy sets.
class SetExpression {
public:
    // Throws SyntaxError if name is not an identifier.
    static SetExpression variable(std::string name);
    static SetExpression complement(SetExpression operand);
    // op must be Union, Intersection, Implication or Biimplication.
    static SetExpression binary(SetOp op, SetExpression left, SetExpression right);

    SetOp op() const noexcept;
    const std::string& name() const noexcept;
    SetExpression left() const;
    SetExpression right() const;

    friend bool operator==(const SetExpression& a, const SetExpression& b);

private:
    struct Node;
    explicit SetExpression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

inline SetExpression operator!(SetExpression e) { return SetExpression::complement(std::move(e)); }
inline SetExpression operator|(SetExpression a, SetExpression b) {
    return SetExpression::binary(SetOp::Union, std::move(a), std::move(b));
}
inline SetExpression operator&(SetExpression a, SetExpression b) {
    return SetExpression::binary(SetOp::Intersection, std::move(a), std::move(b));
}
inline SetExpression set_implies(SetExpression a, SetExpression b) {
    return SetExpression::binary(SetOp::Implication, std::move(a), std::move(b));
}
inline SetExpression set_iff(SetExpression a, SetExpression b) {
    return SetExpression::binary(SetOp::Biimplication, std::move(a), std::move(b));
}

// Same grammar and precedence as formulas with `!` (∁) for complement,
// `&` (∩), `|` (∪), `=>` (⇒) and `<=>` (⇔).
SetExpression parse_set_expression(std::string_view text);
std::string render_set_expression(const SetExpression& e);

// Variable -> atom, complement -> NOT, union -> OR, intersection -> AND,
// implication -> IMP, bi-implication -> IFF.
Formula corresponding_formula(const SetExpression& e);

using SetEnvironment = std::map<std::string, FuzzySet, std::less<>>;

// For element i the result weight is weight(corresponding_formula(e), w_i)
// where w_i gives each set variable that set's weight at element i. The
// result is named by the rendered expression. Throws BindingError for an
// unbound variable or sets over different universes.
FuzzySet eval_set_expression(const SetExpression& e, const SetEnvironment& env,
                             std::size_t cap = kDefaultAtomCap);

FuzzySet set_union(const FuzzySet& a, const FuzzySet& b);
FuzzySet set_intersection(const FuzzySet& a, const FuzzySet& b);

// e equals the universal set for every universe and every membership weights.
bool verify_universal_law(const SetExpression& e, std::size_t cap = kDefaultSymbolicCap);
// e equals the empty set for every universe and every membership weights.
bool verify_empty_law(const SetExpression& e, std::size_t cap = kDefaultSymbolicCap);

// Exact elementwise equality; BindingError when the universes differ.
bool set_equal(const FuzzySet& a, const FuzzySet& b);
bool is_universal(const FuzzySet& s);
bool is_empty(const FuzzySet& s);

// Weight 1 for members, 0 for the rest. BindingError for unknown elements.
FuzzySet embed_classical(const std::vector<std::string>& members, UniversePtr universe,
                         std::string name = "crisp");
// Members in universe order. Throws NotCrisp if any weight is not 0 or 1.
std::vector<std::string> project_classical(const FuzzySet& s);

}  // namespace cfl
