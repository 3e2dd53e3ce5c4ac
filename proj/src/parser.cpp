#include "sdual/parser.hpp"

#include <cctype>

namespace sdual {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Registry& reg) : s_(text), reg_(reg) {}

    Multivector run() {
        Multivector m = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError("unexpected trailing input", pos_);
        return m;
    }

private:
    const std::string& s_;
    const Registry& reg_;
    size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_atom(char c) const {
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c));
    }

    Multivector expr() {
        Multivector m = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                m = m + term();
            } else if (c == '-') {
                ++pos_;
                m = m - term();
            } else {
                return m;
            }
        }
    }

    Multivector term() {
        Multivector m = factor();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '^') {
                ++pos_;
                m = m * factor();
            } else if (c == '/') {
                size_t at = pos_;
                ++pos_;
                m = divide(m, factor(), at);
            } else if (starts_atom(c)) {
                m = m * factor(); // juxtaposition
            } else {
                return m;
            }
        }
    }

    Multivector factor() {
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        return power();
    }

    Multivector power() {
        Multivector base = atom();
        for (;;) {
            size_t save = pos_;
            if (peek() != '^') return base;
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = save; // wedge: handled by the product level
                return base;
            }
            unsigned long e = exponent();
            Multivector r = Multivector::scalar(*base.reg, Scalar(1));
            for (unsigned long k = 0; k < e; ++k) r = r * base;
            base = r;
        }
    }

    Multivector atom() {
        char c = peek();
        size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Multivector m = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return m;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return Multivector::scalar(reg_, Scalar(mpq_class(mpz_class(digits))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            if (pos_ < s_.size() && s_[pos_] == '~') {
                name += s_[pos_++];
            }
            if (name == "i") return Multivector::scalar(reg_, Scalar::i());
            if (auto ev = reg_.find_even(name)) return Multivector::variable(reg_, *ev);
            if (auto od = reg_.find_odd(name)) return Multivector::generator(reg_, *od);
            throw ParseError("unknown identifier '" + name + "'", at);
        }
        throw ParseError("expected a number, name, or parenthesized expression", at);
    }

    unsigned long exponent() {
        std::string digits;
        skip();
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        unsigned long e = std::stoul(digits);
        if (e > 64) throw ParseError("exponent too large", pos_);
        return e;
    }

    Multivector divide(const Multivector& num, const Multivector& den, size_t at) {
        if (den.is_zero()) throw ParseError("division by zero", at);
        RationalFunction c;
        for (const auto& [ids, v] : den.terms) {
            if (!ids.empty())
                throw ParseError("division by an expression with odd generators", at);
            c = v;
        }
        return num * (RationalFunction(Polynomial(Scalar(1))) / c);
    }
};

} // namespace

Multivector parse_multivector(const std::string& text, const Registry& reg) {
    return Parser(text, reg).run();
}

} // namespace sdual
