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
#include <charconv>
#include <cmath>
#include <numbers>

#include "qlogic/error.hpp"
#include "qlogic/scenario.hpp"

namespace qlogic::scenario {

std::string format_real(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, result.ptr};
}

std::string format_amplitude(quantum::Amplitude z) {
    if (z.imag() == 0.0) {
        return format_real(z.real());
    }
    std::string imag = format_real(z.imag()) + "i";
    if (z.real() == 0.0) {
        return imag;
    }
    return format_real(z.real()) + (z.imag() < 0.0 ? "" : "+") + imag;
}

namespace {

// expr   := signed (('*' | '/') signed)*
// signed := ('+' | '-') signed | factor
// factor := number | "pi" | "sqrt(" expr ")" | "(" expr ")"
class RealParser {
  public:
    explicit RealParser(std::string_view text) : text_(text) {}

    double parse() {
        if (text_.empty()) {
            throw SyntaxError("expected a number", 0);
        }
        const double value = expr();
        if (pos_ != text_.size()) {
            throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        if (!std::isfinite(value)) {
            throw SyntaxError("value is not finite", 0);
        }
        return value;
    }

  private:
    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double expr() {
        double value = signed_factor();
        for (;;) {
            if (eat('*')) {
                value *= signed_factor();
            } else if (eat('/')) {
                value /= signed_factor();
            } else {
                return value;
            }
        }
    }

    double signed_factor() {
        if (eat('-')) {
            return -signed_factor();
        }
        if (eat('+')) {
            return signed_factor();
        }
        return factor();
    }

    double factor() {
        const std::string_view rest = text_.substr(pos_);
        if (rest.starts_with("pi")) {
            pos_ += 2;
            return std::numbers::pi;
        }
        if (rest.starts_with("sqrt(")) {
            pos_ += 5;
            const double inner = expr();
            if (!eat(')')) {
                throw SyntaxError("expected ')'", pos_);
            }
            if (inner < 0.0) {
                throw SyntaxError("sqrt of a negative number", pos_);
            }
            return std::sqrt(inner);
        }
        if (eat('(')) {
            const double inner = expr();
            if (!eat(')')) {
                throw SyntaxError("expected ')'", pos_);
            }
            return inner;
        }
        return number();
    }

    double number() {
        const std::size_t start = pos_;
        auto digit = [&](std::size_t i) {
            return i < text_.size() && text_[i] >= '0' && text_[i] <= '9';
        };
        while (digit(pos_) || (pos_ < text_.size() && text_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t exp = pos_ + 1;
            if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-')) {
                ++exp;
            }
            if (digit(exp)) {
                pos_ = exp;
                while (digit(pos_)) {
                    ++pos_;
                }
            }
        }
        if (pos_ == start) {
            throw SyntaxError("expected a number", start);
        }
        double value = 0.0;
        const char *first = text_.data() + start;
        const char *last = text_.data() + pos_;
        const auto result = std::from_chars(first, last, value);
        if (result.ec != std::errc() || result.ptr != last) {
            throw SyntaxError("malformed number '" + std::string(first, last) + "'", start);
        }
        return value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

double parse_real(std::string_view text) { return RealParser(text).parse(); }

quantum::Amplitude parse_amplitude(std::string_view text) {
    if (text.empty()) {
        throw SyntaxError("expected an amplitude", 0);
    }
    if (text.back() != 'i') {
        return {parse_real(text), 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // Split "re+im" at the last top-level sign that is not an exponent sign.
    std::size_t split = std::string_view::npos;
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        const char c = body[i];
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        } else if ((c == '+' || c == '-') && depth == 0 && i > 0) {
            const char prev = body[i - 1];
            const bool exponent = (prev == 'e' || prev == 'E') && i >= 2 &&
                                  ((body[i - 2] >= '0' && body[i - 2] <= '9') ||
                                   body[i - 2] == '.');
            const bool after_operator = prev == '*' || prev == '/' || prev == '(' ||
                                        prev == '+' || prev == '-';
            if (!exponent && !after_operator) {
                split = i;
            }
        }
    }
    auto imaginary = [](std::string_view coefficient, std::size_t offset) {
        if (coefficient.empty() || coefficient == "+") {
            return 1.0;
        }
        if (coefficient == "-") {
            return -1.0;
        }
        try {
            return parse_real(coefficient);
        } catch (const SyntaxError &e) {
            throw SyntaxError("malformed imaginary part", offset + e.position());
        }
    };
    if (split == std::string_view::npos) {
        return {0.0, imaginary(body, 0)};
    }
    return {parse_real(body.substr(0, split)), imaginary(body.substr(split), split)};
}

} // namespace qlogic::scenario
