#include "detail/syntax.hpp"

#include <array>
#include <cctype>
#include <vector>

#include "cfl/error.hpp"
#include "cfl/formula.hpp"

namespace cfl::detail {

namespace {

enum class Tok { LParen, RParen, Not, And, Or, Implies, Iff, Ident, BadIdent, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

struct Spelling {
    std::string_view text;
    Tok kind;
    // Dialect the spelling belongs to; both when shared.
    bool formula;
    bool set;
};

// Longest spellings first where prefixes collide ("<->" before "->").
constexpr std::array kSpellings = {
    Spelling{"<->", Tok::Iff, true, false},
    Spelling{"<=>", Tok::Iff, false, true},
    Spelling{"->", Tok::Implies, true, false},
    Spelling{"=>", Tok::Implies, false, true},
    Spelling{"(", Tok::LParen, true, true},
    Spelling{")", Tok::RParen, true, true},
    Spelling{"!", Tok::Not, true, true},
    Spelling{"&", Tok::And, true, true},
    Spelling{"|", Tok::Or, true, true},
    Spelling{"\xC2\xAC", Tok::Not, true, false},       // ¬
    Spelling{"\xE2\x88\xA7", Tok::And, true, false},   // ∧
    Spelling{"\xE2\x88\xA8", Tok::Or, true, false},    // ∨
    Spelling{"\xE2\x86\x92", Tok::Implies, true, false},  // →
    Spelling{"\xE2\x86\x94", Tok::Iff, true, false},   // ↔
    Spelling{"\xE2\x88\x81", Tok::Not, false, true},   // ∁
    Spelling{"\xE2\x88\xA9", Tok::And, false, true},   // ∩
    Spelling{"\xE2\x88\xAA", Tok::Or, false, true},    // ∪
    Spelling{"\xE2\x87\x92", Tok::Implies, false, true},  // ⇒
    Spelling{"\xE2\x87\x94", Tok::Iff, false, true},   // ⇔
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view text, Dialect dialect) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            std::string word(text.substr(i, j - i));
            out.push_back({is_identifier(word) ? Tok::Ident : Tok::BadIdent, i, std::move(word)});
            i = j;
            continue;
        }
        bool matched = false;
        for (const auto& s : kSpellings) {
            if (text.substr(i).starts_with(s.text)) {
                const bool allowed = dialect == Dialect::Formula ? s.formula : s.set;
                if (!allowed)
                    throw SyntaxError("operator '" + std::string(s.text) + "' is not valid in a " +
                                          (dialect == Dialect::Formula ? "formula" : "set expression"),
                                      i);
                out.push_back({s.kind, i, std::string(s.text)});
                i += s.text.size();
                matched = true;
                break;
            }
        }
        if (!matched) throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Tok::End, text.size(), {}});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::unique_ptr<SyntaxNode> parse_all() {
        auto root = parse_iff();
        if (peek().kind == Tok::RParen) throw SyntaxError("unbalanced ')'", peek().pos);
        if (peek().kind != Tok::End)
            throw SyntaxError("unexpected '" + peek().text + "' after complete expression", peek().pos);
        return root;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& advance() { return tokens_[at_++]; }

    static std::unique_ptr<SyntaxNode> make(Op op, std::unique_ptr<SyntaxNode> l, std::unique_ptr<SyntaxNode> r) {
        auto n = std::make_unique<SyntaxNode>();
        n->op = op;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    std::unique_ptr<SyntaxNode> parse_iff() {
        auto lhs = parse_implies();
        while (peek().kind == Tok::Iff) {
            advance();
            lhs = make(Op::Iff, std::move(lhs), parse_implies());
        }
        return lhs;
    }

    std::unique_ptr<SyntaxNode> parse_implies() {
        auto lhs = parse_or();
        if (peek().kind == Tok::Implies) {
            advance();
            return make(Op::Implies, std::move(lhs), parse_implies());
        }
        return lhs;
    }

    std::unique_ptr<SyntaxNode> parse_or() {
        auto lhs = parse_and();
        while (peek().kind == Tok::Or) {
            advance();
            lhs = make(Op::Or, std::move(lhs), parse_and());
        }
        return lhs;
    }

    std::unique_ptr<SyntaxNode> parse_and() {
        auto lhs = parse_not();
        while (peek().kind == Tok::And) {
            advance();
            lhs = make(Op::And, std::move(lhs), parse_not());
        }
        return lhs;
    }

    std::unique_ptr<SyntaxNode> parse_not() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Not:
                advance();
                return make(Op::Not, parse_not(), nullptr);
            case Tok::LParen: {
                advance();
                auto inner = parse_iff();
                if (peek().kind != Tok::RParen)
                    throw SyntaxError("expected ')' to close '(' at offset " + std::to_string(t.pos), peek().pos);
                advance();
                return inner;
            }
            case Tok::Ident: {
                auto leaf = std::make_unique<SyntaxNode>();
                leaf->name = advance().text;
                return leaf;
            }
            case Tok::BadIdent:
                throw SyntaxError("illegal atom name '" + t.text + "'", t.pos);
            case Tok::End:
                throw SyntaxError("expected operand but found end of input", t.pos);
            default:
                throw SyntaxError("expected operand but found '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
};

}  // namespace

std::unique_ptr<SyntaxNode> parse(std::string_view text, Dialect dialect) {
    return Parser(tokenize(text, dialect)).parse_all();
}

}  // namespace cfl::detail
