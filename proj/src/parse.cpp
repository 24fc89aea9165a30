#include "ctrace/parse.hpp"

#include <cctype>

#include "ctrace/errors.hpp"

namespace ctrace {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_name_char(char c) { return is_letter(c) || is_digit(c) || c == '_'; }

Integer parse_posint(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && is_digit(cur.text[cur.pos])) ++cur.pos;
    if (cur.pos == start) throw ParseError("expected a number", start);
    return Integer(std::string(cur.text.substr(start, cur.pos - start)), 10);
}

std::string_view parse_name(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && is_name_char(cur.text[cur.pos])) ++cur.pos;
    return cur.text.substr(start, cur.pos - start);
}

// term := coeff | [coeff '*'] factor ('*' factor)*
Polynomial parse_term(Ring& ring, Cursor& cur, bool negative) {
    Rational coeff(negative ? -1 : 1);
    Monomial mono;
    bool saw_factor = false, saw_coeff = false;

    char c = cur.peek();
    if (is_digit(c)) {
        std::size_t at = cur.pos;
        Integer num = parse_posint(cur);
        if (cur.eat('/')) {
            Integer den = parse_posint(cur);
            if (den == 0) throw ParseError("zero denominator", at);
            Rational q(num, den);
            q.canonicalize();
            coeff *= q;
        } else {
            coeff *= Rational(num);
        }
        saw_coeff = true;
        if (!cur.eat('*')) return Polynomial::term(ring, coeff, Monomial::one());
    }

    std::vector<Monomial::Entry> entries;
    for (;;) {
        cur.skip_ws();
        std::size_t at = cur.pos;
        char f = cur.peek();
        if (!is_letter(f)) {
            if (f == '\0')
                throw ParseError("unexpected end of input, expected a variable", at);
            if (is_digit(f))
                throw ParseError(std::string("misplaced number (coefficients precede variables)"), at);
            if (!is_name_char(f) && f != '+' && f != '-' && f != '*' && f != '^' && f != '/')
                throw ParseError(std::string("unknown character '") + f + "'", at);
            throw ParseError("expected a variable", at);
        }
        std::string_view name = parse_name(cur);
        if (!Ring::valid_name(name))
            throw ParseError("invalid variable name '" + std::string(name) + "'", at);
        unsigned exp = 1;
        if (cur.eat('^')) {
            std::size_t eat_pos = cur.pos;
            Integer e = parse_posint(cur);
            if (e < 1 || !e.fits_uint_p()) throw ParseError("exponent out of range", eat_pos);
            exp = static_cast<unsigned>(e.get_ui());
        }
        entries.push_back({ring.var(name), exp});
        saw_factor = true;
        if (!cur.eat('*')) break;
    }
    if (!saw_factor && !saw_coeff) throw ParseError("empty term", cur.pos);
    mono = Monomial::from_entries(ring, std::move(entries));
    return Polynomial::term(ring, coeff, mono);
}

}  // namespace

Polynomial parse_polynomial(Ring& ring, std::string_view text) {
    Cursor cur{text};
    if (cur.done()) throw ParseError("empty input", 0);

    PolyBuilder acc(ring);
    bool negative = cur.eat('-');
    acc.add(parse_term(ring, cur, negative));
    while (!cur.done()) {
        char c = cur.peek();
        if (c == '+' || c == '-') {
            ++cur.pos;
            acc.add(parse_term(ring, cur, c == '-'));
        } else if (!is_name_char(c) && c != '*' && c != '^' && c != '/') {
            throw ParseError(std::string("unknown character '") + c + "'", cur.pos);
        } else {
            throw ParseError("expected '+' or '-'", cur.pos);
        }
    }
    return acc.build();
}

}  // namespace ctrace
