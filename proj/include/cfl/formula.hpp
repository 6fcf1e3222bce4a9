#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cfl {

enum class Connective { Atom, Not, And, Or, Implies, Iff };

// True for a letter or underscore followed by letters, digits or underscores.
bool is_identifier(std::string_view name);

// Immutable propositional formula over named atoms. Copies share structure.
class Formula {
public:
    // Throws SyntaxError if name is not an identifier.
    static Formula atom(std::string name);
    static Formula negation(Formula operand);
    // kind must be And, Or, Implies or Iff.
    static Formula binary(Connective kind, Formula left, Formula right);

    Connective kind() const noexcept;
    // Atom name; empty for compound formulas.
    const std::string& name() const noexcept;
    // Operand of Not, left side of a binary connective.
    Formula left() const;
    // Right side of a binary connective.
    Formula right() const;

    bool is_atom() const noexcept { return kind() == Connective::Atom; }

    // Structural equality.
    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&(Formula a, Formula b) { return Formula::binary(Connective::And, std::move(a), std::move(b)); }
inline Formula operator|(Formula a, Formula b) { return Formula::binary(Connective::Or, std::move(a), std::move(b)); }
inline Formula implies(Formula a, Formula b) { return Formula::binary(Connective::Implies, std::move(a), std::move(b)); }
inline Formula iff(Formula a, Formula b) { return Formula::binary(Connective::Iff, std::move(a), std::move(b)); }

// Precedence, tightest first: ! & | -> <->. `&`, `|`, `<->` associate left,
// `->` associates right. Unicode ¬ ∧ ∨ → ↔ are accepted as aliases.
// Throws SyntaxError carrying the byte offset of the offending token.
Formula parse_formula(std::string_view text);

// Fully parenthesized ASCII form, e.g. "(q | (!q))". Atoms print bare.
std::string render_formula(const Formula& f);

// Distinct atoms in order of first occurrence, left to right. This is the
// column order of every table and the variable order of every polynomial.
std::vector<std::string> atom_list(const Formula& f);

}  // namespace cfl
