#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

// Shared tokenizer and precedence-climbing parser for the formula grammar and
// the set-expression grammar. The two differ only in operator spellings.
namespace cfl::detail {

enum class Dialect { Formula, Set };

enum class Op { Leaf, Not, And, Or, Implies, Iff };

struct SyntaxNode {
    Op op = Op::Leaf;
    std::string name;
    std::unique_ptr<SyntaxNode> lhs;
    std::unique_ptr<SyntaxNode> rhs;
};

std::unique_ptr<SyntaxNode> parse(std::string_view text, Dialect dialect);

}  // namespace cfl::detail
