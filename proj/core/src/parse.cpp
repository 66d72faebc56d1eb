#include "stdbases/parse.hpp"

#include "stdbases/errors.hpp"

#include <cctype>

namespace stdbases {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool accept(char c) {
        if (!done() && text[pos] == c) { ++pos; return true; }
        return false;
    }
};

Integer parse_integer(Cursor& cur) {
    std::size_t start = cur.pos;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    if (cur.pos == start) throw ParseError("expected a number", cur.pos);
    return Integer(std::string(cur.text.substr(start, cur.pos - start)));
}

// Longest variable-name match at the current position.
int match_variable(Cursor& cur, const RingDescriptor& ring) {
    int best = -1;
    std::size_t best_len = 0;
    for (int i = 0; i < ring.arity(); ++i) {
        const std::string& name = ring.name(i);
        if (name.size() > best_len && cur.text.substr(cur.pos, name.size()) == name) {
            best = i;
            best_len = name.size();
        }
    }
    if (best >= 0) cur.pos += best_len;
    return best;
}

unsigned parse_exponent(Cursor& cur) {
    cur.skip_space();
    if (!cur.accept('^')) return 1;
    cur.skip_space();
    Integer e = parse_integer(cur);
    if (e < 0 || e > 100000) throw ParseError("exponent out of range", cur.pos);
    return static_cast<unsigned>(e);
}

// coefficient? factor ( '*'? factor )*
Term parse_term(Cursor& cur, const RingDescriptor& ring) {
    cur.skip_space();
    Rational coeff = 1;
    std::vector<unsigned> exps(static_cast<std::size_t>(ring.arity()), 0u);
    bool saw_anything = false;

    if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        Integer num = parse_integer(cur);
        Integer den = 1;
        cur.skip_space();
        if (cur.accept('/')) {
            cur.skip_space();
            den = parse_integer(cur);
            if (den == 0) throw ParseError("zero denominator", cur.pos);
        }
        coeff = Rational(num, den);
        saw_anything = true;
    }

    for (;;) {
        cur.skip_space();
        std::size_t before = cur.pos;
        bool explicit_star = cur.accept('*');
        cur.skip_space();
        if (cur.done()) {
            if (explicit_star) throw ParseError("dangling '*'", cur.pos);
            break;
        }
        if (std::isalpha(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_') {
            std::size_t var_pos = cur.pos;
            int v = match_variable(cur, ring);
            if (v < 0) throw ParseError("unknown variable", var_pos);
            exps[static_cast<std::size_t>(v)] += parse_exponent(cur);
            saw_anything = true;
        } else if (explicit_star && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            Integer num = parse_integer(cur);
            Integer den = 1;
            cur.skip_space();
            if (cur.accept('/')) {
                cur.skip_space();
                den = parse_integer(cur);
                if (den == 0) throw ParseError("zero denominator", cur.pos);
            }
            coeff *= Rational(num, den);
        } else {
            cur.pos = before;
            if (explicit_star) throw ParseError("expected a factor after '*'", before);
            break;
        }
    }

    if (!saw_anything) throw ParseError("expected a term", cur.pos);
    return Term{Monomial(std::move(exps)), std::move(coeff)};
}

}  // namespace

Polynomial parse_form(std::string_view text, const RingDescriptor& ring) {
    Cursor cur{text};
    std::vector<Term> terms;

    cur.skip_space();
    if (cur.done()) throw ParseError("empty input", 0);

    bool negative = false;
    if (cur.accept('-')) negative = true;
    else cur.accept('+');

    for (;;) {
        Term t = parse_term(cur, ring);
        if (negative) t.coefficient = -t.coefficient;
        terms.push_back(std::move(t));

        cur.skip_space();
        if (cur.done()) break;
        if (cur.accept('-')) negative = true;
        else if (cur.accept('+')) negative = false;
        else throw ParseError("expected '+', '-' or end of input", cur.pos);
    }

    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace stdbases
