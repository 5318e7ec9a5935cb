#include "desing/parse.hpp"

#include <cctype>

namespace desing {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line;
    int colBase = 1;

    int col() const { return colBase + static_cast<int>(pos); }
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skipWs() {
        while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col()); }
};

Polynomial parseExpr(Cursor& c, const RingPtr& ring);

Rational parseNumber(Cursor& c) {
    size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) c.fail("expected number");
    Int num(c.s.substr(start, c.pos - start));
    c.skipWs();
    if (c.peek() == '/') {
        size_t save = c.pos;
        ++c.pos;
        c.skipWs();
        size_t ds = c.pos;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
        if (c.pos == ds) {
            c.pos = save; // not a fraction after all
            return Rational(num);
        }
        Int den(c.s.substr(ds, c.pos - ds));
        if (den == 0) c.fail("zero denominator");
        return Rational(num) / Rational(den);
    }
    return Rational(num);
}

Polynomial parseBase(Cursor& c, const RingPtr& ring) {
    c.skipWs();
    char ch = c.peek();
    if (ch == '(') {
        ++c.pos;
        Polynomial p = parseExpr(c, ring);
        c.skipWs();
        if (c.peek() != ')') c.fail("expected ')'");
        ++c.pos;
        return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Polynomial(ring, parseNumber(c));
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        size_t start = c.pos;
        while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_')) ++c.pos;
        std::string name = c.s.substr(start, c.pos - start);
        int idx = ring->indexOf(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", c.line, c.colBase + static_cast<int>(start));
        return Polynomial::variable(ring, static_cast<size_t>(idx));
    }
    c.fail("expected number, variable or '('");
}

Polynomial parseFactor(Cursor& c, const RingPtr& ring) {
    Polynomial base = parseBase(c, ring);
    c.skipWs();
    if (c.peek() == '^') {
        ++c.pos;
        c.skipWs();
        if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected exponent");
        size_t start = c.pos;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
        unsigned long long e = std::stoull(c.s.substr(start, c.pos - start));
        return base.pow(e);
    }
    return base;
}

Polynomial parseTerm(Cursor& c, const RingPtr& ring) {
    Polynomial p = parseFactor(c, ring);
    while (true) {
        c.skipWs();
        char ch = c.peek();
        if (ch == '*') {
            ++c.pos;
            p = p * parseFactor(c, ring);
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '(' || ch == '_') {
            p = p * parseFactor(c, ring); // implicit multiplication: 3x, 2(x+y)
        } else {
            break;
        }
    }
    return p;
}

Polynomial parseExpr(Cursor& c, const RingPtr& ring) {
    c.skipWs();
    bool neg = false;
    if (c.peek() == '-') { neg = true; ++c.pos; }
    else if (c.peek() == '+') ++c.pos;
    Polynomial p = parseTerm(c, ring);
    if (neg) p = -p;
    while (true) {
        c.skipWs();
        char ch = c.peek();
        if (ch == '+') {
            ++c.pos;
            p = p + parseTerm(c, ring);
        } else if (ch == '-') {
            ++c.pos;
            p = p - parseTerm(c, ring);
        } else {
            break;
        }
    }
    return p;
}

} // namespace

Polynomial parsePolynomial(const std::string& text, const RingPtr& ring, int line) {
    Cursor c{text, 0, line};
    Polynomial p = parseExpr(c, ring);
    c.skipWs();
    if (!c.done()) c.fail("unexpected trailing input");
    return p;
}

std::vector<Polynomial> parsePolynomialList(const std::string& text, const RingPtr& ring, int line) {
    std::vector<Polynomial> out;
    Cursor c{text, 0, line};
    while (true) {
        Polynomial p = parseExpr(c, ring);
        out.push_back(std::move(p));
        c.skipWs();
        if (c.peek() == ',') {
            ++c.pos;
            continue;
        }
        if (!c.done()) c.fail("expected ',' or end of list");
        break;
    }
    return out;
}

} // namespace desing
