#include "cfl/weight.hpp"

#include "cfl/error.hpp"
#include "detail/program.hpp"

namespace cfl {

const Weight& WeightAssignment::at(const std::string& atom) const {
    auto it = values_.find(atom);
    if (it == values_.end()) throw BindingError("atom '" + atom + "' has no weight");
    return it->second;
}

namespace {

// Walks the assignment tree atom by atom carrying the partial product, so
// every leaf is one true-or-false row and its product is already formed.
struct RowSum {
    const detail::Program& program;
    const std::vector<Rational>& on;
    const std::vector<Rational>& off;
    Rational total{0};

    void visit(std::size_t depth, std::uint64_t bits, const Rational& product) {
        if (product == 0) return;
        if (depth == on.size()) {
            if (program.evaluate(bits)) total += product;
            return;
        }
        visit(depth + 1, bits, product * off[depth]);
        visit(depth + 1, bits | (std::uint64_t{1} << depth), product * on[depth]);
    }
};

}  // namespace

Weight weight(const Formula& f, const WeightAssignment& w, std::size_t cap) {
    detail::Program program(f);
    const auto& atoms = program.atoms();
    detail::check_cap(atoms.size(), cap);
    std::vector<Rational> on, off;
    for (const auto& a : atoms) {
        on.push_back(w.at(a).value());
        off.push_back(1 - on.back());
    }
    RowSum sum{program, on, off};
    sum.visit(0, 0, Rational(1));
    return Weight(sum.total);
}

Weight connective_weight(Connective kind, const Weight& a, const std::optional<Weight>& b) {
    if (kind == Connective::Atom) throw ArgumentError("connective_weight needs a connective");
    if (kind == Connective::Not) {
        if (b) throw ArgumentError("negation takes one operand");
        return a.complement();
    }
    if (!b) throw ArgumentError("binary connective needs two operands");
    const Rational& x = a.value();
    const Rational& y = b->value();
    switch (kind) {
        case Connective::And: return Weight(x * y);
        case Connective::Or: return Weight(x + y - x * y);
        case Connective::Implies: return Weight(1 - x + x * y);
        case Connective::Iff: return Weight(1 - x - y + 2 * x * y);
        default: break;
    }
    throw ArgumentError("unknown connective");
}

Weight connective_weight(Connective kind, const Rational& a, const std::optional<Rational>& b) {
    std::optional<Weight> wb;
    if (b) wb = Weight(*b);
    return connective_weight(kind, Weight(a), wb);
}

MultilinearPoly symbolic_weight(const Formula& f, std::size_t cap) {
    detail::Program program(f);
    auto column = detail::truth_column(program, cap);

    // Moebius inversion over the subset lattice: the coefficient of monomial S
    // is the sum over T subset of S of (-1)^|S \ T| * f(T).
    std::vector<std::int64_t> coeff(column.begin(), column.end());
    const std::size_t n = program.atoms().size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        for (std::size_t m = 0; m < coeff.size(); ++m)
            if (m & bit) coeff[m] -= coeff[m ^ bit];
    }

    std::map<Monomial, Rational> terms;
    for (std::size_t m = 0; m < coeff.size(); ++m)
        if (coeff[m] != 0) terms.emplace(m, Rational(coeff[m]));
    return MultilinearPoly(program.atoms(), terms);
}

Weight poly_eval(const MultilinearPoly& p, const WeightAssignment& w) { return Weight(p.evaluate(w)); }

bool is_cfl_tautology(const Formula& f, std::size_t cap) {
    return symbolic_weight(f, cap) == MultilinearPoly::constant(1);
}

bool is_cfl_contradiction(const Formula& f, std::size_t cap) { return symbolic_weight(f, cap).is_zero(); }

}  // namespace cfl
