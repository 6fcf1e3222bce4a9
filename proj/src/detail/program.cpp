#include "detail/program.hpp"

#include <algorithm>
#include <unordered_map>

#include "cfl/error.hpp"

namespace cfl::detail {

namespace {

constexpr std::size_t kHardCap = 62;

void emit(const Formula& f, const std::unordered_map<std::string, std::uint32_t>& index,
          std::vector<Connective>& ops, std::vector<std::uint32_t>& atoms) {
    switch (f.kind()) {
        case Connective::Atom:
            ops.push_back(Connective::Atom);
            atoms.push_back(index.at(f.name()));
            return;
        case Connective::Not:
            emit(f.left(), index, ops, atoms);
            break;
        default:
            emit(f.left(), index, ops, atoms);
            emit(f.right(), index, ops, atoms);
    }
    ops.push_back(f.kind());
    atoms.push_back(0);
}

}  // namespace

Program::Program(const Formula& f) : atoms_(atom_list(f)) {
    std::unordered_map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < atoms_.size(); ++i) index.emplace(atoms_[i], i);
    std::vector<Connective> ops;
    std::vector<std::uint32_t> args;
    emit(f, index, ops, args);
    code_.reserve(ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) code_.push_back({ops[i], args[i]});
}

bool Program::evaluate(std::uint64_t bits) const {
    thread_local std::vector<std::uint8_t> stack;
    stack.clear();
    for (const Instr& in : code_) {
        if (in.op == Connective::Atom) {
            stack.push_back(static_cast<std::uint8_t>((bits >> in.atom) & 1U));
            continue;
        }
        if (in.op == Connective::Not) {
            stack.back() ^= 1U;
            continue;
        }
        const bool r = stack.back() != 0;
        stack.pop_back();
        const bool l = stack.back() != 0;
        bool v = false;
        switch (in.op) {
            case Connective::And: v = l && r; break;
            case Connective::Or: v = l || r; break;
            case Connective::Implies: v = !l || r; break;
            case Connective::Iff: v = l == r; break;
            default: break;
        }
        stack.back() = v ? 1 : 0;
    }
    return stack.back() != 0;
}

void check_cap(std::size_t atoms, std::size_t cap) {
    if (atoms > std::min(cap, kHardCap)) throw CapExceeded(atoms, std::min(cap, kHardCap));
}

std::vector<std::uint8_t> truth_column(const Program& program, std::size_t cap) {
    const std::size_t n = program.atoms().size();
    check_cap(n, cap);
    std::vector<std::uint8_t> column(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < column.size(); ++m) column[m] = program.evaluate(m) ? 1 : 0;
    return column;
}

}  // namespace cfl::detail
