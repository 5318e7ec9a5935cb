#include <doctest.h>

#include "desing/gcd.hpp"
#include "desing/parse.hpp"

using namespace desing;

namespace {
RingPtr XY() { return makeRing({"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return parsePolynomial(s, r); }
} // namespace

TEST_CASE("polynomial arithmetic") {
    auto r = XY();
    CHECK((P(r, "x") + P(r, "-x")).isZero());
    CHECK(P(r, "(x+y)*(x-y)") == P(r, "x^2 - y^2"));

    // pow against a repeated-multiplication oracle
    Polynomial base = P(r, "x + 1");
    Polynomial byMul(r, Rational(1));
    for (int i = 0; i < 3; ++i) byMul = byMul * base;
    CHECK(base.pow(3) == byMul);
    CHECK(base.pow(3) == P(r, "x^3 + 3x^2 + 3x + 1"));

    auto rz = makeRing({"z"});
    CHECK_THROWS(P(r, "x") + Polynomial::variable(rz, 0));
}

TEST_CASE("partial derivatives") {
    auto r = XY();
    CHECK(P(r, "x^2 - y^3").derivative(1) == P(r, "-3y^2"));
    CHECK(P(r, "7/2").derivative(0).isZero());
    CHECK(P(r, "x^2*y").derivative(0) == P(r, "2*x*y"));
}

TEST_CASE("substitution") {
    auto r = XY();
    auto rty = makeRing({"t", "y"});
    // x -> t*y, y -> y: the cusp pullback before division
    std::vector<Polynomial> images{P(rty, "t*y"), P(rty, "y")};
    CHECK(P(r, "x^2 - y^3").substitute(images, rty) == P(rty, "t^2*y^2 - y^3"));

    std::vector<Polynomial> id{Polynomial::variable(r, 0), Polynomial::variable(r, 1)};
    Polynomial f = P(r, "x^2*y - 3*x + 1/2");
    CHECK(f.substitute(id, r) == f);

    std::vector<Polynomial> killX{Polynomial(r), Polynomial::variable(r, 1)};
    CHECK(P(r, "x + y").substitute(killX, r) == P(r, "y"));

    CHECK_THROWS(f.substitute({Polynomial::variable(r, 0)}, r));
}

TEST_CASE("coordinate valuation") {
    auto r = XY();
    Ideal I(r, {P(r, "x^3*y"), P(r, "x^5")});
    CHECK(idealCoordValuation(I, 0) == 3);

    auto r4 = makeRing({"x1", "y1", "z1", "w1"});
    Ideal J(r4, {P(r4, "x1*(1 + y1^2 + z1^2 + w1^2)"), P(r4, "x1^5*(1 + y1^6 + z1^6 + w1^6)")});
    CHECK(idealCoordValuation(J, 0) == 1);

    Ideal unit(r, {Polynomial(r, Rational(1))});
    CHECK(idealCoordValuation(unit, 0) == 0);
    CHECK_THROWS(idealCoordValuation(Ideal(r), 0));

    // additivity under multiplication by x^k
    Polynomial f = P(r, "x^2*y + x^3");
    Polynomial xk = P(r, "x^4");
    CHECK((f * xk).coordinateValuation(0) == f.coordinateValuation(0) + 4);
    // min-stability for ideals
    Ideal K(r, {P(r, "x^2"), P(r, "x^3*y")});
    Ideal K2 = idealSum(K, Ideal(r, {P(r, "x*y")}));
    CHECK(idealCoordValuation(K2, 0) == std::min<uint32_t>(idealCoordValuation(K, 0), 1));
}

// brute-force shift-and-scan, independent of Polynomial::orderAtPoint's path
static uint64_t taylorOracle(const Polynomial& f, const std::vector<Rational>& p) {
    const RingPtr& r = f.ring();
    std::vector<Polynomial> shifted;
    for (size_t i = 0; i < r->dim(); ++i)
        shifted.push_back(Polynomial::variable(r, i) + Polynomial(r, p[i]));
    Polynomial g(r);
    for (auto& [m, c] : f.terms()) {
        Polynomial t(r, c);
        for (size_t i = 0; i < m.e.size(); ++i)
            for (uint32_t k = 0; k < m.e[i]; ++k) t = t * shifted[i];
        g = g + t;
    }
    uint64_t best = UINT64_MAX;
    for (auto& [m, c] : g.terms()) best = std::min<uint64_t>(best, m.degree());
    return best;
}

TEST_CASE("order at a rational point") {
    auto r = XY();
    Ideal cusp(r, {P(r, "x^2 - y^3")});
    CHECK(orderAtRationalPoint(cusp, {Rational(0), Rational(0)}) == 2);
    CHECK(orderAtRationalPoint(cusp, {Rational(1), Rational(1)}) == 1);
    CHECK(taylorOracle(cusp.gens[0], {Rational(1), Rational(1)}) == 1);
    Ideal unit(r, {Polynomial(r, Rational(3))});
    CHECK(orderAtRationalPoint(unit, {Rational(2), Rational(5)}) == 0);
    CHECK_THROWS(orderAtRationalPoint(Ideal(r), {Rational(0), Rational(0)}));
}

TEST_CASE("multivariate gcd") {
    auto r = XY();
    CHECK(gcdMultivariate(P(r, "x^2 - y^2"), P(r, "x - y")) == P(r, "x - y"));
    CHECK(gcdMultivariate(P(r, "x^2*y + x*y^2"), P(r, "x*y")) == P(r, "x*y"));
    CHECK(gcdMultivariate(P(r, "x + 1"), P(r, "x - 1")).isConstant());

    // divides both, cofactors coprime
    Polynomial f = P(r, "(x+y)^2 * (x - 2y)");
    Polynomial g = P(r, "(x+y) * y^2");
    Polynomial d = gcdMultivariate(f, g);
    Polynomial cf = exactDivide(f, d), cg = exactDivide(g, d);
    CHECK(gcdMultivariate(cf, cg).isConstant());

    CHECK(squarefreePart(P(r, "x^2*y")) == P(r, "x*y"));
    CHECK(squarefreePart(P(r, "(x+y)^3")) == P(r, "x + y"));
}

TEST_CASE("polynomial parser") {
    auto r = XY();
    CHECK(P(r, "3/2*x^2 - y") == P(r, "3/2x^2 - y"));
    CHECK_THROWS_AS(parsePolynomial("x^", r), ParseError);
    CHECK_THROWS_AS(parsePolynomial("q + 1", r), ParseError);
    CHECK(P(r, "-(x - y)") == P(r, "y - x"));
    // canonical printing survives reparsing
    Polynomial f = P(r, "x^2*y - 3*x + 1/2 - y^2");
    CHECK(parsePolynomial(f.toString(), r) == f);
}
