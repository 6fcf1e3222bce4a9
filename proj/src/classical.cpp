#include "cfl/classical.hpp"

#include <algorithm>

#include "cfl/error.hpp"
#include "detail/program.hpp"

namespace cfl {

bool Assignment::at(const std::string& atom) const {
    auto it = values_.find(atom);
    if (it == values_.end()) throw BindingError("atom '" + atom + "' has no truth value");
    return it->second;
}

bool eval_classical(const Formula& f, const Assignment& a) {
    switch (f.kind()) {
        case Connective::Atom: return a.at(f.name());
        case Connective::Not: return !eval_classical(f.left(), a);
        case Connective::And: return eval_classical(f.left(), a) && eval_classical(f.right(), a);
        case Connective::Or: return eval_classical(f.left(), a) || eval_classical(f.right(), a);
        case Connective::Implies: return !eval_classical(f.left(), a) || eval_classical(f.right(), a);
        case Connective::Iff: return eval_classical(f.left(), a) == eval_classical(f.right(), a);
    }
    return false;
}

TruthTable build_truth_table(const Formula& f, std::size_t cap) {
    detail::Program program(f);
    const std::size_t n = program.atoms().size();
    detail::check_cap(n, cap);

    TruthTable table{program.atoms(), std::vector<std::uint8_t>(std::size_t{1} << n), render_formula(f)};
    for (std::size_t row = 0; row < table.rows(); ++row) {
        // Row bits put atom 0 in the most significant place; the program wants it in bit 0.
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (table.input(row, i)) bits |= std::uint64_t{1} << i;
        table.outputs[row] = program.evaluate(bits) ? 1 : 0;
    }
    return table;
}

std::string render_truth_table(const TruthTable& table) {
    std::string out;
    for (const auto& a : table.atoms) out += a + ' ';
    out += "|| " + table.label + '\n';
    for (std::size_t row = 0; row < table.rows(); ++row) {
        for (std::size_t i = 0; i < table.atoms.size(); ++i) {
            out += table.input(row, i) ? '1' : '0';
            out += ' ';
        }
        out += "|| ";
        out += table.output(row) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Classification classify(const Formula& f, std::size_t cap) {
    const auto table = build_truth_table(f, cap);
    const auto ones = std::count(table.outputs.begin(), table.outputs.end(), std::uint8_t{1});
    if (ones == static_cast<std::ptrdiff_t>(table.rows())) return Classification::Tautology;
    if (ones == 0) return Classification::Contradiction;
    return Classification::Contingent;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Tautology: return "TAUTOLOGY";
        case Classification::Contradiction: return "CONTRADICTION";
        case Classification::Contingent: return "CONTINGENT";
    }
    return "?";
}

Integer count_logical_functions(unsigned n) {
    if (n == 0) throw ArgumentError("count_logical_functions needs n >= 1");
    // 2^(2^32) already needs half a gigabyte of digits.
    if (n > 32) throw ArgumentError("count_logical_functions supports n <= 32, got " + std::to_string(n));
    return Integer(1) << (std::uint64_t{1} << n);
}

namespace {

Formula conjoin(const std::vector<Formula>& parts) {
    Formula out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out = out & parts[i];
    return out;
}

}  // namespace

std::vector<LogicalFunction> enumerate_functions(unsigned n) {
    if (n < 1 || n > 3) throw ArgumentError("enumerate_functions needs 1 <= n <= 3, got " + std::to_string(n));

    std::vector<std::string> names;
    std::vector<Formula> atoms;
    for (unsigned i = 1; i <= n; ++i) {
        names.push_back("q" + std::to_string(i));
        atoms.push_back(Formula::atom(names.back()));
    }

    const std::size_t rows = std::size_t{1} << n;
    const std::uint64_t functions = std::uint64_t{1} << rows;
    std::vector<LogicalFunction> out;
    out.reserve(functions);

    for (std::uint64_t column = 0; column < functions; ++column) {
        TruthTable table{names, std::vector<std::uint8_t>(rows), {}};
        std::vector<Formula> terms;
        for (std::size_t row = 0; row < rows; ++row) {
            table.outputs[row] = static_cast<std::uint8_t>((column >> (rows - 1 - row)) & 1U);
            if (!table.output(row)) continue;
            std::vector<Formula> literals;
            for (std::size_t i = 0; i < n; ++i) literals.push_back(table.input(row, i) ? atoms[i] : !atoms[i]);
            terms.push_back(conjoin(literals));
        }

        Formula dnf = [&] {
            if (terms.empty()) {
                std::vector<Formula> parts{atoms[0], !atoms[0]};
                parts.insert(parts.end(), atoms.begin() + 1, atoms.end());
                return conjoin(parts);
            }
            Formula d = terms.front();
            for (std::size_t i = 1; i < terms.size(); ++i) d = d | terms[i];
            return d;
        }();
        table.label = render_formula(dnf);
        out.push_back({std::move(table), std::move(dnf)});
    }
    return out;
}

}  // namespace cfl
