#include "matsing/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace matsing {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw input_error("parse error at position " + std::to_string(pos) + ": " + msg);
    }
};

struct Parser {
    Lexer lx;
    const RingPtr& ring;
    std::map<std::string, std::size_t> var_index;

    Parser(const RingPtr& r, const std::string& text) : lx{text}, ring(r) {
        for (std::size_t i = 0; i < r->vars.size(); ++i) var_index[r->vars[i]] = i;
    }

    mpz_class read_integer() {
        lx.skip_ws();
        std::size_t start = lx.pos;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            ++lx.pos;
        if (lx.pos == start) lx.fail("expected a number");
        return mpz_class(lx.s.substr(start, lx.pos - start));
    }

    std::uint32_t read_exponent() {
        mpz_class e = read_integer();
        if (e < 0 || e >= Monomial::kExpCap) lx.fail("exponent out of range");
        return static_cast<std::uint32_t>(e.get_ui());
    }

    Polynomial parse_number() {
        mpz_class num = read_integer();
        mpz_class den = 1;
        lx.skip_ws();
        if (lx.peek() == '/') {
            ++lx.pos;
            den = read_integer();
            if (den == 0) lx.fail("zero denominator");
        }
        return Polynomial::constant(ring, fe_from_fraction(ring->field, num, den));
    }

    Polynomial parse_atom() {
        char c = lx.peek();
        if (c == '(') {
            ++lx.pos;
            Polynomial f = parse_expr();
            if (lx.peek() != ')') lx.fail("expected ')'");
            ++lx.pos;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Polynomial f = parse_number();
            // reject implicit multiplication like 2x
            if (lx.pos < lx.s.size()) {
                char n = lx.s[lx.pos];
                if (std::isalpha(static_cast<unsigned char>(n)) || n == '_' || n == '(')
                    lx.fail("implicit multiplication is not allowed; write '*'");
            }
            return f;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = lx.pos;
            while (lx.pos < lx.s.size() &&
                   (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
                ++lx.pos;
            std::string name = lx.s.substr(start, lx.pos - start);
            auto it = var_index.find(name);
            if (it == var_index.end()) {
                lx.pos = start;
                lx.fail("unknown variable '" + name + "'");
            }
            if (lx.pos < lx.s.size() && lx.s[lx.pos] == '(')
                lx.fail("implicit multiplication is not allowed; write '*'");
            return Polynomial::variable(ring, it->second);
        }
        lx.fail("expected a number, variable, or '('");
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        lx.skip_ws();
        if (lx.peek() == '^') {
            ++lx.pos;
            std::uint32_t e = read_exponent();
            return pow(base, e);
        }
        return base;
    }

    Polynomial parse_factor() {
        if (lx.peek() == '-') {
            ++lx.pos;
            return -parse_factor();
        }
        return parse_power();
    }

    Polynomial parse_term() {
        Polynomial f = parse_factor();
        while (lx.peek() == '*') {
            ++lx.pos;
            f = f * parse_factor();
        }
        return f;
    }

    Polynomial parse_expr() {
        Polynomial f = parse_term();
        while (true) {
            char c = lx.peek();
            if (c == '+') {
                ++lx.pos;
                f = f + parse_term();
            } else if (c == '-') {
                ++lx.pos;
                f = f - parse_term();
            } else {
                return f;
            }
        }
    }
};

void append_monomial(std::ostringstream& os, const Ring& ring, const Monomial& m, bool lead_star) {
    bool first = !lead_star;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        std::uint32_t e = m.exp(i);
        if (e == 0) continue;
        if (!first) os << '*';
        first = false;
        os << ring.vars[i];
        if (e > 1) os << '^' << e;
    }
}

}  // namespace

Polynomial parse_poly(const RingPtr& ring, const std::string& text) {
    Parser p(ring, text);
    if (p.lx.eof()) p.lx.fail("empty polynomial");
    Polynomial f = p.parse_expr();
    if (!p.lx.eof()) p.lx.fail("trailing input");
    return f;
}

std::string poly_to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const Ring& R = *f.ring();
    const Field& F = R.field;
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        FieldElem c = t.c;
        if (F.kind == FieldKind::QQ && fe_sign(F, c) < 0) {
            os << (first ? "-" : " - ");
            c = fe_neg(F, c);
        } else {
            if (!first) os << " + ";
        }
        if (t.m.is_one()) {
            os << fe_to_string(F, c);
        } else if (fe_is_one(F, c)) {
            append_monomial(os, R, t.m, false);
        } else {
            os << fe_to_string(F, c);
            append_monomial(os, R, t.m, true);
        }
        first = false;
    }
    return os.str();
}

}  // namespace matsing
