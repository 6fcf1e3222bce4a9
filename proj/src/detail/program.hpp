#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfl/formula.hpp"

namespace cfl::detail {

// A formula flattened to postfix over atom indices, for fast evaluation at
// many 0/1 points. Bit i of the input corresponds to atoms()[i].
class Program {
public:
    explicit Program(const Formula& f);

    const std::vector<std::string>& atoms() const noexcept { return atoms_; }

    bool evaluate(std::uint64_t bits) const;

private:
    struct Instr {
        Connective op;
        std::uint32_t atom;
    };

    std::vector<std::string> atoms_;
    std::vector<Instr> code_;
};

// Truth column indexed by bitmask (bit i = atoms()[i]). Throws CapExceeded.
std::vector<std::uint8_t> truth_column(const Program& program, std::size_t cap);

// Rejects formulas whose atom count exceeds the cap (or 62, whichever is lower).
void check_cap(std::size_t atoms, std::size_t cap);

}  // namespace cfl::detail
