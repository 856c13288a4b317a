// Copyright 2026 The qlogic Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cassert>
#include <optional>

#include "qlogic/error.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/quantum.hpp"

namespace qlogic::logic {

struct Formula::Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t size;
};

Formula Formula::atom(std::string name) {
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}, {}, 1}));
}

Formula Formula::dual_atom(std::string name) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::DualAtom, std::move(name), {}, {}, 1}));
}

Formula Formula::conj(Formula left, Formula right) {
    const std::size_t size = 1 + left.size() + right.size();
    return Formula(std::make_shared<const Node>(
        Node{Kind::Conj, {}, std::move(left.node_), std::move(right.node_), size}));
}

Formula Formula::disj(Formula left, Formula right) {
    const std::size_t size = 1 + left.size() + right.size();
    return Formula(std::make_shared<const Node>(
        Node{Kind::Disj, {}, std::move(left.node_), std::move(right.node_), size}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string &Formula::name() const noexcept { return node_->name; }

Formula Formula::left() const {
    assert(!is_literal());
    return Formula(node_->left);
}

Formula Formula::right() const {
    assert(!is_literal());
    return Formula(node_->right);
}

std::size_t Formula::size() const noexcept { return node_->size; }

bool operator==(const Formula &lhs, const Formula &rhs) noexcept {
    if (lhs.node_ == rhs.node_) {
        return true;
    }
    if (lhs.kind() != rhs.kind() || lhs.size() != rhs.size()) {
        return false;
    }
    if (lhs.is_literal()) {
        return lhs.name() == rhs.name();
    }
    return lhs.left() == rhs.left() && lhs.right() == rhs.right();
}

bool operator<(const Formula &lhs, const Formula &rhs) noexcept {
    if (lhs.kind() != rhs.kind()) {
        return lhs.kind() < rhs.kind();
    }
    if (lhs.is_literal()) {
        return lhs.name() < rhs.name();
    }
    if (!(lhs.left() == rhs.left())) {
        return lhs.left() < rhs.left();
    }
    return lhs.right() < rhs.right();
}

// -- printing -----------------------------------------------------------------

namespace {

std::string_view dual_mark(Notation n) { return n == Notation::Ascii ? "^" : "⊥"; }
std::string_view and_mark(Notation) { return " & "; }
std::string_view or_mark(Notation n) { return n == Notation::Ascii ? " (+) " : " ⊕ "; }
std::string_view turnstile(Notation n) { return n == Notation::Ascii ? "|-" : "⊢"; }

void print(const Formula &f, Notation n, std::string &out) {
    switch (f.kind()) {
    case Formula::Kind::Atom:
        out += f.name();
        return;
    case Formula::Kind::DualAtom:
        out += f.name();
        out += dual_mark(n);
        return;
    case Formula::Kind::Conj:
    case Formula::Kind::Disj:
        break;
    }
    // Left operands of the same connective chain without parentheses; any
    // other compound operand is parenthesized.
    const Formula lhs = f.left();
    const Formula rhs = f.right();
    const bool wrap_left = !lhs.is_literal() && lhs.kind() != f.kind();
    const bool wrap_right = !rhs.is_literal();
    if (wrap_left) {
        out += '(';
    }
    print(lhs, n, out);
    if (wrap_left) {
        out += ')';
    }
    out += f.kind() == Formula::Kind::Conj ? and_mark(n) : or_mark(n);
    if (wrap_right) {
        out += '(';
    }
    print(rhs, n, out);
    if (wrap_right) {
        out += ')';
    }
}

// -- parsing ------------------------------------------------------------------

enum class Tok { Ident, Dual, And, Or, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

constexpr std::string_view kUnicodeDual = "⊥";
constexpr std::string_view kUnicodeOr = "⊕";
constexpr std::string_view kUnicodeTurnstile = "⊢";

class Lexer {
  public:
    explicit Lexer(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    Token next() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            return {Tok::End, base_ + start, {}};
        }
        const std::string_view rest = text_.substr(pos_);
        if (rest.starts_with("(+)")) {
            pos_ += 3;
            return {Tok::Or, base_ + start, "(+)"};
        }
        if (rest.starts_with(kUnicodeOr)) {
            pos_ += kUnicodeOr.size();
            return {Tok::Or, base_ + start, std::string(kUnicodeOr)};
        }
        if (rest.starts_with(kUnicodeDual)) {
            pos_ += kUnicodeDual.size();
            return {Tok::Dual, base_ + start, std::string(kUnicodeDual)};
        }
        const char c = rest.front();
        switch (c) {
        case '^':
            ++pos_;
            return {Tok::Dual, base_ + start, "^"};
        case '&':
            ++pos_;
            return {Tok::And, base_ + start, "&"};
        case '(':
            ++pos_;
            return {Tok::LParen, base_ + start, "("};
        case ')':
            ++pos_;
            return {Tok::RParen, base_ + start, ")"};
        default:
            break;
        }
        std::size_t end = pos_;
        while (end < text_.size()) {
            const char d = text_[end];
            const bool ok = (d >= 'A' && d <= 'Z') || (d >= 'a' && d <= 'z') ||
                            (d >= '0' && d <= '9') || d == '_';
            if (!ok) {
                break;
            }
            ++end;
        }
        const std::string_view word = text_.substr(pos_, end - pos_);
        if (word.empty() || !quantum::is_identifier(word)) {
            throw SyntaxError("unexpected character '" + std::string(1, c) + "'", base_ + start);
        }
        pos_ = end;
        return {Tok::Ident, base_ + start, std::string(word)};
    }

  private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

class Parser {
  public:
    Parser(std::string_view text, std::size_t base) : lexer_(text, base) { advance(); }

    Formula parse_all() {
        Formula f = parse_expr();
        if (current_.kind != Tok::End) {
            throw SyntaxError("unexpected '" + current_.text + "'", current_.pos);
        }
        return f;
    }

  private:
    void advance() { current_ = lexer_.next(); }

    Formula parse_expr() {
        Formula acc = parse_unary();
        std::optional<Tok> op;
        while (current_.kind == Tok::And || current_.kind == Tok::Or) {
            if (op && *op != current_.kind) {
                throw AmbiguityError("'&' and '(+)' mixed without parentheses", current_.pos);
            }
            op = current_.kind;
            advance();
            Formula rhs = parse_unary();
            acc = *op == Tok::And ? Formula::conj(std::move(acc), std::move(rhs))
                                  : Formula::disj(std::move(acc), std::move(rhs));
        }
        return acc;
    }

    Formula parse_unary() {
        Formula f = parse_primary();
        while (current_.kind == Tok::Dual) {
            f = dual_formula(f);
            advance();
        }
        return f;
    }

    Formula parse_primary() {
        if (current_.kind == Tok::Ident) {
            Formula f = Formula::atom(current_.text);
            advance();
            return f;
        }
        if (current_.kind == Tok::LParen) {
            const std::size_t open = current_.pos;
            advance();
            Formula f = parse_expr();
            if (current_.kind != Tok::RParen) {
                throw SyntaxError("unbalanced '(' opened at position " + std::to_string(open),
                                  current_.pos);
            }
            advance();
            return f;
        }
        if (current_.kind == Tok::End) {
            throw SyntaxError("unexpected end of formula", current_.pos);
        }
        throw SyntaxError("expected atom or '(' but found '" + current_.text + "'",
                          current_.pos);
    }

    Lexer lexer_;
    Token current_{Tok::End, 0, {}};
};

void collect_atoms(const Formula &f, std::set<std::string> &out) {
    if (f.is_literal()) {
        out.insert(f.name());
        return;
    }
    collect_atoms(f.left(), out);
    collect_atoms(f.right(), out);
}

} // namespace

std::string to_string(const Formula &f, Notation notation) {
    std::string out;
    print(f, notation, out);
    return out;
}

Formula parse_formula(std::string_view text) { return Parser(text, 0).parse_all(); }

Formula dual_formula(const Formula &f) {
    switch (f.kind()) {
    case Formula::Kind::Atom:
        return Formula::dual_atom(f.name());
    case Formula::Kind::DualAtom:
        return Formula::atom(f.name());
    case Formula::Kind::Conj:
        return Formula::disj(dual_formula(f.left()), dual_formula(f.right()));
    case Formula::Kind::Disj:
        return Formula::conj(dual_formula(f.left()), dual_formula(f.right()));
    }
    return f;
}

std::set<std::string> atoms(const Formula &f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

// -- judgements ---------------------------------------------------------------

std::string to_string(const Judgement &j, Notation notation) {
    std::string out;
    if (j.polarity == Polarity::Assertion) {
        out += turnstile(notation);
        out += ' ';
        print(j.formula, notation, out);
    } else {
        print(j.formula, notation, out);
        out += ' ';
        out += turnstile(notation);
    }
    return out;
}

Judgement parse_judgement(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (begin < end && is_space(text[begin])) {
        ++begin;
    }
    while (end > begin && is_space(text[end - 1])) {
        --end;
    }
    const std::string_view body = text.substr(begin, end - begin);
    for (std::string_view mark : {std::string_view("|-"), kUnicodeTurnstile}) {
        if (body.starts_with(mark)) {
            const std::size_t offset = begin + mark.size();
            return Judgement::assertion(
                Parser(text.substr(offset, end - offset), offset).parse_all());
        }
        if (body.ends_with(mark)) {
            return Judgement::falsity(
                Parser(text.substr(begin, body.size() - mark.size()), begin).parse_all());
        }
    }
    throw SyntaxError("judgement needs a leading or trailing '|-'", begin);
}

Judgement dual_judgement(const Judgement &j) {
    return {j.polarity == Polarity::Assertion ? Polarity::Falsity : Polarity::Assertion,
            dual_formula(j.formula)};
}

} // namespace qlogic::logic
