#include "cfl/formula.hpp"

#include <cctype>
#include <unordered_set>

#include "cfl/error.hpp"
#include "detail/syntax.hpp"

namespace cfl {

struct Formula::Node {
    Connective kind;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    auto head = static_cast<unsigned char>(name.front());
    if (!std::isalpha(head) && head != '_') return false;
    for (char c : name.substr(1))
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Formula Formula::atom(std::string name) {
    if (!is_identifier(name)) throw SyntaxError("illegal atom name '" + name + "'", 0);
    return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::negation(Formula operand) {
    return Formula(std::make_shared<const Node>(Node{Connective::Not, {}, std::move(operand.node_), nullptr}));
}

Formula Formula::binary(Connective kind, Formula left, Formula right) {
    if (kind == Connective::Atom || kind == Connective::Not)
        throw ArgumentError("Formula::binary needs a binary connective");
    return Formula(std::make_shared<const Node>(Node{kind, {}, std::move(left.node_), std::move(right.node_)}));
}

Connective Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const noexcept { return node_->name; }

Formula Formula::left() const {
    if (!node_->lhs) throw ArgumentError("atom has no operands");
    return Formula(node_->lhs);
}

Formula Formula::right() const {
    if (!node_->rhs) throw ArgumentError("formula has no right operand");
    return Formula(node_->rhs);
}

bool operator==(const Formula& a, const Formula& b) {
    // Iterative to survive very deep chains.
    std::vector<std::pair<const Formula::Node*, const Formula::Node*>> todo{{a.node_.get(), b.node_.get()}};
    while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        if (x == y) continue;
        if (!x || !y) return false;
        if (x->kind != y->kind || x->name != y->name) return false;
        todo.emplace_back(x->lhs.get(), y->lhs.get());
        todo.emplace_back(x->rhs.get(), y->rhs.get());
    }
    return true;
}

namespace {

Formula from_syntax(const detail::SyntaxNode& n) {
    using detail::Op;
    switch (n.op) {
        case Op::Leaf: return Formula::atom(n.name);
        case Op::Not: return !from_syntax(*n.lhs);
        case Op::And: return from_syntax(*n.lhs) & from_syntax(*n.rhs);
        case Op::Or: return from_syntax(*n.lhs) | from_syntax(*n.rhs);
        case Op::Implies: return implies(from_syntax(*n.lhs), from_syntax(*n.rhs));
        case Op::Iff: return iff(from_syntax(*n.lhs), from_syntax(*n.rhs));
    }
    throw ArgumentError("unknown syntax node");
}

const char* symbol(Connective c) {
    switch (c) {
        case Connective::And: return " & ";
        case Connective::Or: return " | ";
        case Connective::Implies: return " -> ";
        case Connective::Iff: return " <-> ";
        default: return "";
    }
}

void render(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Connective::Atom:
            out += f.name();
            return;
        case Connective::Not:
            out += "(!";
            render(f.left(), out);
            out += ')';
            return;
        default:
            out += '(';
            render(f.left(), out);
            out += symbol(f.kind());
            render(f.right(), out);
            out += ')';
    }
}

void collect(const Formula& f, std::vector<std::string>& out, std::unordered_set<std::string>& seen) {
    if (f.is_atom()) {
        if (seen.insert(f.name()).second) out.push_back(f.name());
        return;
    }
    collect(f.left(), out, seen);
    if (f.kind() != Connective::Not) collect(f.right(), out, seen);
}

}  // namespace

Formula parse_formula(std::string_view text) {
    return from_syntax(*detail::parse(text, detail::Dialect::Formula));
}

std::string render_formula(const Formula& f) {
    std::string out;
    render(f, out);
    return out;
}

std::vector<std::string> atom_list(const Formula& f) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    collect(f, out, seen);
    return out;
}

}  // namespace cfl
