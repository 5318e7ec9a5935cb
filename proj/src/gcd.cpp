#include "desing/gcd.hpp"

#include <map>

namespace desing {

namespace {

// univariate view in variable v: degree -> coefficient (free of v)
std::map<uint32_t, Polynomial> uniView(const Polynomial& f, size_t v) {
    std::map<uint32_t, Polynomial> out;
    for (auto& [m, c] : f.terms()) {
        Monomial mm = m;
        uint32_t k = mm.e[v];
        mm.e[v] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, Polynomial(f.ring())).first;
        it->second.addTerm(mm, c);
    }
    return out;
}

uint32_t uniDeg(const std::map<uint32_t, Polynomial>& view) {
    return view.empty() ? 0 : view.rbegin()->first;
}

bool involves(const Polynomial& f, size_t v) {
    for (auto& [m, c] : f.terms())
        if (m.e[v]) return true;
    return false;
}

// pseudo remainder of a by b as univariate polynomials in v
Polynomial prem(Polynomial a, const Polynomial& b, size_t v) {
    auto bv = uniView(b, v);
    uint32_t db = uniDeg(bv);
    Polynomial lb = bv.rbegin()->second;
    while (!a.isZero()) {
        auto av = uniView(a, v);
        uint32_t da = uniDeg(av);
        if (da < db) break;
        Polynomial la = av.rbegin()->second;
        Monomial shift(a.ring()->dim());
        shift.e[v] = da - db;
        a = a * lb - b * (la * Polynomial(a.ring(), shift, 1));
    }
    return a;
}

Polynomial contentIn(const Polynomial& f, size_t v) {
    auto view = uniView(f, v);
    std::vector<Polynomial> coeffs;
    for (auto& [k, c] : view) coeffs.push_back(c);
    return multiGcd(coeffs);
}

} // namespace

Polynomial exactDivide(const Polynomial& a, const Polynomial& b) {
    if (b.isZero()) throw std::domain_error("division by zero polynomial");
    Polynomial rem = a;
    Polynomial q(a.ring());
    auto lb = b.leading(TermOrder::DegRevLex);
    while (!rem.isZero()) {
        auto lr = rem.leading(TermOrder::DegRevLex);
        if (!monoDivides(lb->first, lr->first)) throw std::domain_error("exactDivide: not divisible");
        Polynomial t(a.ring(), monoDiv(lr->first, lb->first), lr->second / lb->second);
        q = q + t;
        rem = rem - t * b;
    }
    return q;
}

Polynomial gcdMultivariate(const Polynomial& f, const Polynomial& g) {
    if (f.isZero() && g.isZero()) throw std::domain_error("gcd(0,0) undefined");
    if (f.isZero()) return g.monic();
    if (g.isZero()) return f.monic();
    if (f.isConstant() || g.isConstant()) return Polynomial(f.ring(), Rational(1));

    // recurse on the highest-index variable present in either
    size_t d = f.ring()->dim();
    size_t v = d;
    for (size_t i = d; i-- > 0;)
        if (involves(f, i) || involves(g, i)) { v = i; break; }
    if (v == d) return Polynomial(f.ring(), Rational(1));

    if (!involves(f, v)) {
        // gcd divides f, hence is free of v: gcd(f, content_v(g))
        return gcdMultivariate(f, contentIn(g, v)).monic();
    }
    if (!involves(g, v)) return gcdMultivariate(g, contentIn(f, v)).monic();

    Polynomial cf = contentIn(f, v), cg = contentIn(g, v);
    Polynomial a = exactDivide(f, cf), b = exactDivide(g, cg);
    if (uniDeg(uniView(a, v)) < uniDeg(uniView(b, v))) std::swap(a, b);
    // primitive PRS
    while (true) {
        Polynomial r = prem(a, b, v);
        if (r.isZero()) break;
        a = b;
        b = exactDivide(r, contentIn(r, v));
    }
    Polynomial cont = gcdMultivariate(cf, cg);
    return (cont * exactDivide(b, contentIn(b, v))).monic();
}

Polynomial multiGcd(const std::vector<Polynomial>& fs) {
    Polynomial acc;
    bool seeded = false;
    for (auto& f : fs) {
        if (f.isZero()) continue;
        if (!seeded) {
            acc = f.monic();
            seeded = true;
        } else {
            acc = gcdMultivariate(acc, f);
        }
        if (acc.isConstant()) return Polynomial(f.ring(), Rational(1));
    }
    if (!seeded) throw std::domain_error("gcd of an empty/zero family");
    return acc;
}

Polynomial squarefreePart(const Polynomial& f) {
    if (f.isZero()) throw std::domain_error("squarefree part of zero");
    if (f.isConstant()) return Polynomial(f.ring(), Rational(1));
    std::vector<Polynomial> fam{f};
    for (size_t i = 0; i < f.ring()->dim(); ++i) {
        Polynomial df = f.derivative(i);
        if (!df.isZero()) fam.push_back(df);
    }
    Polynomial g = multiGcd(fam);
    return exactDivide(f, g).monic();
}

} // namespace desing
