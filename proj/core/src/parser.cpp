#include "bisimod/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "bisimod/errors.hpp"

namespace bisimod {

namespace {

enum class Tok {
    Ident,
    False,
    True,
    Not,
    Box,
    Diamond,
    BisBox,
    BisDiamond,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    End,
};

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, pos_, ""});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
        throw ParseError(msg, pos_, std::move(expected));
    }

    Token next() {
        const std::size_t start = pos_;
        const char c = text_[pos_];
        switch (c) {
        case '(': ++pos_; return {Tok::LParen, start, "("};
        case ')': ++pos_; return {Tok::RParen, start, ")"};
        case '~': ++pos_; return {Tok::Not, start, "~"};
        case '&': ++pos_; return {Tok::And, start, "&"};
        case '|': ++pos_; return {Tok::Or, start, "|"};
        case '-':
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                pos_ += 2;
                return {Tok::Implies, start, "->"};
            }
            ++pos_;
            fail("expected '>' after '-'", {">"});
        case '[':
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == ']') {
                pos_ += 2;
                return {Tok::Box, start, "[]"};
            }
            if (pos_ + 2 < text_.size() && text_[pos_ + 1] == 'b' && text_[pos_ + 2] == ']') {
                pos_ += 3;
                return {Tok::BisBox, start, "[b]"};
            }
            ++pos_;
            fail("expected ']' or 'b]' after '['", {"]", "b]"});
        case '<':
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                pos_ += 2;
                return {Tok::Diamond, start, "<>"};
            }
            if (pos_ + 2 < text_.size() && text_[pos_ + 1] == 'b' && text_[pos_ + 2] == '>') {
                pos_ += 3;
                return {Tok::BisDiamond, start, "<b>"};
            }
            if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' && text_[pos_ + 2] == '>') {
                pos_ += 3;
                return {Tok::Iff, start, "<->"};
            }
            ++pos_;
            fail("expected '>', 'b>' or '->' after '<'", {">", "b>", "->"});
        default: break;
        }
        if (ident_start(c)) {
            std::size_t end = pos_ + 1;
            while (end < text_.size() && ident_char(text_[end])) ++end;
            std::string word(text_.substr(pos_, end - pos_));
            pos_ = end;
            if (word == "false") return {Tok::False, start, word};
            if (word == "true") return {Tok::True, start, word};
            return {Tok::Ident, start, word};
        }
        fail("unexpected character", {"formula"});
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Recursive descent over the token stream; one function per precedence level.
class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Formula run() {
        Formula f = parse_iff();
        expect(Tok::End, {"end of input", "&", "|", "->", "<->"});
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(Tok k, std::vector<std::string> expected) {
        if (!accept(k)) {
            throw ParseError("unexpected token '" + peek().text + "'", peek().offset,
                             std::move(expected));
        }
    }

    Formula parse_iff() {
        Formula lhs = parse_implies();
        if (accept(Tok::Iff)) {
            return Formula::equivalence(std::move(lhs), parse_iff());
        }
        return lhs;
    }

    Formula parse_implies() {
        Formula lhs = parse_or();
        if (accept(Tok::Implies)) {
            return Formula::implies(std::move(lhs), parse_implies());
        }
        return lhs;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (accept(Tok::Or)) {
            f = Formula::disjunction(std::move(f), parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_prefix();
        while (accept(Tok::And)) {
            f = Formula::conjunction(std::move(f), parse_prefix());
        }
        return f;
    }

    Formula parse_prefix() {
        switch (peek().kind) {
        case Tok::Not: take(); return Formula::negation(parse_prefix());
        case Tok::Box: take(); return Formula::box(parse_prefix());
        case Tok::Diamond: take(); return Formula::diamond(parse_prefix());
        case Tok::BisBox: take(); return Formula::bisbox(parse_prefix());
        case Tok::BisDiamond: take(); return Formula::bisdiamond(parse_prefix());
        default: return parse_primary();
        }
    }

    Formula parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Ident: return Formula::atom(take().text);
        case Tok::False: take(); return Formula::falsum();
        case Tok::True: take(); return Formula::verum();
        case Tok::LParen: {
            take();
            Formula f = parse_iff();
            expect(Tok::RParen, {")"});
            return f;
        }
        default:
            throw ParseError("unexpected token '" + t.text + "'", t.offset,
                             {"identifier", "false", "true", "(", "~", "[]", "<>", "[b]",
                              "<b>"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

Formula parse(std::string_view text) {
    return Parser(Lexer(text).run()).run();
}

} // namespace bisimod
