#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cfl/formula.hpp"
#include "cfl/rational.hpp"

namespace cfl {

// Default upper bound on the atom count of a formula for table construction
// and numeric weighting.
inline constexpr std::size_t kDefaultAtomCap = 20;

// Bivalent truth values per atom.
class Assignment {
public:
    Assignment() = default;
    Assignment(std::initializer_list<std::pair<const std::string, bool>> values) : values_(values) {}

    void set(const std::string& atom, bool value) { values_[atom] = value; }
    bool contains(const std::string& atom) const { return values_.count(atom) != 0; }
    // Throws BindingError naming the atom when unassigned.
    bool at(const std::string& atom) const;

private:
    std::map<std::string, bool> values_;
};

// Classical evaluation. Throws BindingError if an atom of f is unassigned.
bool eval_classical(const Formula& f, const Assignment& a);

// Rows are in binary counting order with the first atom as the most
// significant bit: for two atoms, 00, 01, 10, 11.
struct TruthTable {
    std::vector<std::string> atoms;
    std::vector<std::uint8_t> outputs;
    std::string label;

    std::size_t rows() const noexcept { return outputs.size(); }
    bool input(std::size_t row, std::size_t atom) const noexcept {
        return ((row >> (atoms.size() - 1 - atom)) & 1U) != 0;
    }
    bool output(std::size_t row) const noexcept { return outputs[row] != 0; }
};

// Throws CapExceeded when the formula has more than `cap` atoms.
TruthTable build_truth_table(const Formula& f, std::size_t cap = kDefaultAtomCap);

// Header `atoms... || label`, then one `bits... || out` line per row.
std::string render_truth_table(const TruthTable& table);

enum class Classification { Tautology, Contradiction, Contingent };

Classification classify(const Formula& f, std::size_t cap = kDefaultAtomCap);

std::string to_string(Classification c);

// 2^(2^n); throws ArgumentError for n == 0.
Integer count_logical_functions(unsigned n);

struct LogicalFunction {
    TruthTable table;
    // Canonical DNF over atoms q1..qn realizing the column.
    Formula formula;
};

// Every output column over atoms q1..qn, 1 <= n <= 3, in increasing order
// of the column read as a binary number (first row most significant).
std::vector<LogicalFunction> enumerate_functions(unsigned n);

}  // namespace cfl
