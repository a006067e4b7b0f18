#include "multisym/poly_io.hpp"

#include <cctype>

#include "multisym/error.hpp"

namespace multisym {

namespace {

class Parser {
public:
    Parser(std::string_view text, const VariableContext& context) : text_(text), context_(context) {}

    Poly parse() {
        Poly out;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            Rat sign(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = Rat(-1);
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            out += parse_term() * sign;
            first = false;
            skip_ws();
            if (at_end()) break;
        }
        return out;
    }

private:
    Poly parse_term() {
        Rat coeff(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            skip_ws();
            if (peek() != '*') return Poly(coeff);
            ++pos_;
            skip_ws();
        }
        Mono m = parse_factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            skip_ws();
            m = m * parse_factor();
        }
        return Poly(m, coeff);
    }

    Mono parse_factor() {
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected variable name");
        while (!at_end()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '{' || c == '}')
                ++pos_;
            else
                break;
        }
        std::string name(text_.substr(start, pos_ - start));
        if (context_.allowed && !context_.allowed->count(name))
            throw Error(ErrorKind::UnknownVariable, "unknown variable '" + name + "' at position " + std::to_string(start));
        Var v = Var::intern(name);
        skip_ws();
        std::uint32_t exponent = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t digits_start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == digits_start) fail("expected exponent");
            unsigned long e = std::stoul(std::string(text_.substr(digits_start, pos_ - digits_start)));
            if (e == 0) fail("exponent must be positive");
            exponent = static_cast<std::uint32_t>(e);
        }
        return Mono(v, exponent);
    }

    Rat parse_rational() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == den_start) fail("expected denominator");
        }
        std::string literal;
        for (char c : text_.substr(start, pos_ - start))
            if (!std::isspace(static_cast<unsigned char>(c))) literal.push_back(c);
        try {
            return Rat::parse(literal);
        } catch (const Error&) {
            fail("malformed rational");
        }
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Syntax, what + " at position " + std::to_string(pos_));
    }

    std::string_view text_;
    const VariableContext& context_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VariableContext& context) { return Parser(text, context).parse(); }

std::string render(const Mono& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += '*';
        out += v.name();
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

std::string render(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rat magnitude = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        if (m.is_one()) {
            out += magnitude.str();
        } else {
            if (!magnitude.is_one()) out += magnitude.str() + "*";
            out += render(m);
        }
    }
    return out;
}

}  // namespace multisym
