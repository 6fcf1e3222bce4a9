#include "cfl/fuzzy_set.hpp"

#include "cfl/error.hpp"
#include "detail/program.hpp"
#include "detail/syntax.hpp"

namespace cfl {

Universe::Universe(std::string name, std::vector<std::string> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
    if (elements_.empty()) throw ArgumentError("universe '" + name_ + "' has no elements");
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (!index_.emplace(elements_[i], i).second)
            throw BindingError("universe '" + name_ + "' lists element '" + elements_[i] + "' twice");
}

std::optional<std::size_t> Universe::index_of(std::string_view element) const {
    auto it = index_.find(element);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

UniversePtr make_universe(std::string name, std::vector<std::string> elements) {
    return UniversePtr(new Universe(std::move(name), std::move(elements)));
}

const Weight& FuzzySet::membership(std::string_view element) const {
    auto i = universe_->index_of(element);
    if (!i) throw BindingError("'" + std::string(element) + "' is not an element of " + universe_->name());
    return weights_[*i];
}

FuzzySet FuzzySet::renamed(std::string name) const { return FuzzySet(std::move(name), universe_, weights_); }

FuzzySet make_set(std::string name, UniversePtr universe, std::vector<Weight> weights) {
    if (!universe) throw ArgumentError("set '" + name + "' has no universe");
    if (weights.size() != universe->size())
        throw ArgumentError("set '" + name + "' has " + std::to_string(weights.size()) + " weights for " +
                            std::to_string(universe->size()) + " elements of " + universe->name());
    return FuzzySet(std::move(name), std::move(universe), std::move(weights));
}

FuzzySet make_set(std::string name, UniversePtr universe, const std::vector<Rational>& weights) {
    std::vector<Weight> checked;
    checked.reserve(weights.size());
    for (const auto& r : weights) checked.emplace_back(r);
    return make_set(std::move(name), std::move(universe), std::move(checked));
}

FuzzySet universal_set(UniversePtr universe, std::string name) {
    const std::size_t n = universe ? universe->size() : 0;
    return make_set(std::move(name), std::move(universe), std::vector<Weight>(n, Weight::one()));
}

FuzzySet empty_set(UniversePtr universe, std::string name) {
    const std::size_t n = universe ? universe->size() : 0;
    return make_set(std::move(name), std::move(universe), std::vector<Weight>(n, Weight::zero()));
}

FuzzySet complement(const FuzzySet& s) {
    std::vector<Weight> out;
    out.reserve(s.size());
    for (const auto& w : s.weights()) out.push_back(w.complement());
    return make_set("(!" + s.name() + ")", s.universe_ptr(), std::move(out));
}

// ---------------------------------------------------------------------------
// Set expressions

struct SetExpression::Node {
    SetOp op;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

SetExpression SetExpression::variable(std::string name) {
    if (!is_identifier(name)) throw SyntaxError("illegal set name '" + name + "'", 0);
    return SetExpression(std::make_shared<const Node>(Node{SetOp::Variable, std::move(name), nullptr, nullptr}));
}

SetExpression SetExpression::complement(SetExpression operand) {
    return SetExpression(std::make_shared<const Node>(Node{SetOp::Complement, {}, std::move(operand.node_), nullptr}));
}

SetExpression SetExpression::binary(SetOp op, SetExpression left, SetExpression right) {
    if (op == SetOp::Variable || op == SetOp::Complement)
        throw ArgumentError("SetExpression::binary needs a binary operator");
    return SetExpression(std::make_shared<const Node>(Node{op, {}, std::move(left.node_), std::move(right.node_)}));
}

SetOp SetExpression::op() const noexcept { return node_->op; }
const std::string& SetExpression::name() const noexcept { return node_->name; }

SetExpression SetExpression::left() const {
    if (!node_->lhs) throw ArgumentError("set variable has no operands");
    return SetExpression(node_->lhs);
}

SetExpression SetExpression::right() const {
    if (!node_->rhs) throw ArgumentError("set expression has no right operand");
    return SetExpression(node_->rhs);
}

bool operator==(const SetExpression& a, const SetExpression& b) {
    return render_set_expression(a) == render_set_expression(b);
}

namespace {

SetExpression from_syntax(const detail::SyntaxNode& n) {
    using detail::Op;
    switch (n.op) {
        case Op::Leaf: return SetExpression::variable(n.name);
        case Op::Not: return !from_syntax(*n.lhs);
        case Op::And: return from_syntax(*n.lhs) & from_syntax(*n.rhs);
        case Op::Or: return from_syntax(*n.lhs) | from_syntax(*n.rhs);
        case Op::Implies: return set_implies(from_syntax(*n.lhs), from_syntax(*n.rhs));
        case Op::Iff: return set_iff(from_syntax(*n.lhs), from_syntax(*n.rhs));
    }
    throw ArgumentError("unknown syntax node");
}

const char* symbol(SetOp op) {
    switch (op) {
        case SetOp::Union: return " | ";
        case SetOp::Intersection: return " & ";
        case SetOp::Implication: return " => ";
        case SetOp::Biimplication: return " <=> ";
        default: return "";
    }
}

void render(const SetExpression& e, std::string& out) {
    switch (e.op()) {
        case SetOp::Variable:
            out += e.name();
            return;
        case SetOp::Complement:
            out += "(!";
            render(e.left(), out);
            out += ')';
            return;
        default:
            out += '(';
            render(e.left(), out);
            out += symbol(e.op());
            render(e.right(), out);
            out += ')';
    }
}

}  // namespace

SetExpression parse_set_expression(std::string_view text) {
    return from_syntax(*detail::parse(text, detail::Dialect::Set));
}

std::string render_set_expression(const SetExpression& e) {
    std::string out;
    render(e, out);
    return out;
}

Formula corresponding_formula(const SetExpression& e) {
    switch (e.op()) {
        case SetOp::Variable: return Formula::atom(e.name());
        case SetOp::Complement: return !corresponding_formula(e.left());
        case SetOp::Union: return corresponding_formula(e.left()) | corresponding_formula(e.right());
        case SetOp::Intersection: return corresponding_formula(e.left()) & corresponding_formula(e.right());
        case SetOp::Implication: return implies(corresponding_formula(e.left()), corresponding_formula(e.right()));
        case SetOp::Biimplication: return iff(corresponding_formula(e.left()), corresponding_formula(e.right()));
    }
    throw ArgumentError("unknown set operator");
}

FuzzySet eval_set_expression(const SetExpression& e, const SetEnvironment& env, std::size_t cap) {
    const Formula f = corresponding_formula(e);
    const auto vars = atom_list(f);
    detail::check_cap(vars.size(), cap);

    std::vector<const FuzzySet*> bound;
    for (const auto& v : vars) {
        auto it = env.find(v);
        if (it == env.end()) throw BindingError("set '" + v + "' is not defined");
        bound.push_back(&it->second);
    }
    const UniversePtr& universe = bound.front()->universe_ptr();
    for (const FuzzySet* s : bound)
        if (!(s->universe() == *universe))
            throw BindingError("set '" + s->name() + "' is over " + s->universe().name() + ", expected " +
                               universe->name());

    std::vector<Weight> out;
    out.reserve(universe->size());
    for (std::size_t i = 0; i < universe->size(); ++i) {
        WeightAssignment w;
        for (std::size_t k = 0; k < vars.size(); ++k) w.set(vars[k], (*bound[k])[i]);
        out.push_back(weight(f, w, cap));
    }
    return make_set(render_set_expression(e), universe, std::move(out));
}

namespace {

FuzzySet combine(SetOp op, const FuzzySet& a, const FuzzySet& b) {
    if (a.name() == b.name() && !set_equal(a, b))
        throw BindingError("two different sets are both named '" + a.name() + "'");
    auto lhs = SetExpression::variable(a.name());
    auto rhs = SetExpression::variable(b.name());
    SetEnvironment env{{a.name(), a}};
    env.emplace(b.name(), b);
    return eval_set_expression(SetExpression::binary(op, lhs, rhs), env);
}

}  // namespace

FuzzySet set_union(const FuzzySet& a, const FuzzySet& b) { return combine(SetOp::Union, a, b); }

FuzzySet set_intersection(const FuzzySet& a, const FuzzySet& b) { return combine(SetOp::Intersection, a, b); }

bool verify_universal_law(const SetExpression& e, std::size_t cap) {
    return is_cfl_tautology(corresponding_formula(e), cap);
}

bool verify_empty_law(const SetExpression& e, std::size_t cap) {
    return is_cfl_contradiction(corresponding_formula(e), cap);
}

bool set_equal(const FuzzySet& a, const FuzzySet& b) {
    if (!(a.universe() == b.universe()))
        throw BindingError("sets '" + a.name() + "' and '" + b.name() + "' are over different universes");
    return std::equal(a.weights().begin(), a.weights().end(), b.weights().begin());
}

bool is_universal(const FuzzySet& s) {
    for (const auto& w : s.weights())
        if (w != Weight::one()) return false;
    return true;
}

bool is_empty(const FuzzySet& s) {
    for (const auto& w : s.weights())
        if (w != Weight::zero()) return false;
    return true;
}

FuzzySet embed_classical(const std::vector<std::string>& members, UniversePtr universe, std::string name) {
    if (!universe) throw ArgumentError("embed_classical needs a universe");
    std::vector<Weight> w(universe->size(), Weight::zero());
    for (const auto& m : members) {
        auto i = universe->index_of(m);
        if (!i) throw BindingError("'" + m + "' is not an element of " + universe->name());
        w[*i] = Weight::one();
    }
    return make_set(std::move(name), std::move(universe), std::move(w));
}

std::vector<std::string> project_classical(const FuzzySet& s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == Weight::one())
            out.push_back(s.universe().elements()[i]);
        else if (s[i] != Weight::zero())
            throw NotCrisp("set '" + s.name() + "' gives " + s.universe().elements()[i] + " weight " +
                           s[i].to_string());
    }
    return out;
}

}  // namespace cfl
