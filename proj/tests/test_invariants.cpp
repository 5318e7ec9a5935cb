#include <doctest.h>

#include "desing/invariants.hpp"
#include "desing/parse.hpp"

using namespace desing;

namespace {
Ideal I(const RingPtr& r, const std::string& gens) { return Ideal(r, parsePolynomialList(gens, r)); }
} // namespace

TEST_CASE("max w-ord") {
    auto r4 = makeRing({"x", "y", "z", "w"});
    // stage 0 of the quadric pair with b = 1: order 2 at the origin only
    Ideal J0 = I(r4, "x^2 + y^2 + z^2 + w^2, x^6 + y^6 + z^6 + w^6");
    auto w0 = maxWOrd(J0, 1, {}, {}, 64);
    CHECK(w0.w == Rational(2));
    CHECK(equalLoci(w0.locus, I(r4, "x, y, z, w")));

    // stage 1 in the x-inverted chart: the weak transform has order 1
    Ideal J1 = I(r4, "x*(1 + y^2 + z^2 + w^2), x^5*(1 + y^6 + z^6 + w^6)");
    std::vector<ExceptionalDivisor> exc{{1, 0, 1}};
    auto w1 = maxWOrd(J1, 1, exc, {}, 64);
    CHECK(w1.w == Rational(1));
    CHECK(idealEqual(w1.weak, I(r4, "1 + y^2 + z^2 + w^2, x^4*(1 + y^6 + z^6 + w^6)")));

    // unit weak transform: the monomial-case trigger
    auto r = makeRing({"x", "y"});
    Ideal M = I(r, "x^3*y");
    std::vector<ExceptionalDivisor> both{{1, 0, 1}, {2, 1, 2}};
    auto wm = maxWOrd(M, 2, both, {}, 64);
    CHECK(wm.w == Rational(0));
    CHECK(isTrivial(wm.locus));
    CHECK(wm.excMonomial == parsePolynomial("x^3*y", r));
}

TEST_CASE("t-invariant with history") {
    auto r4 = makeRing({"x", "y", "z", "w"});
    Ideal J1 = I(r4, "x*(1 + y^2 + z^2 + w^2), x^5*(1 + y^6 + z^6 + w^6)");
    std::vector<ExceptionalDivisor> exc{{1, 0, 1}};
    auto w1 = maxWOrd(J1, 1, exc, {}, 64);
    // drop happened at stage 1, so E^- = {H1}
    auto ts = tState(w1.w, w1.locus, exc, /*ko=*/1);
    CHECK(ts.t == TValue{Rational(1), 1});
    REQUIRE(ts.components.size() == 1);
    CHECK(equalLoci(ts.components[0], I(r4, "x, 1 + y^2 + z^2 + w^2")));

    // the d = 4 object of the two-structure example at stage 0:
    // Sing = V(x1,x3,x4) lies inside the initial divisor {x3 = 0}
    auto rr = makeRing({"x1", "x2", "x3", "x4"});
    Ideal J = I(rr, "x4^2 + x3^3 + x2*x3^2 + x1^3");
    auto w = maxWOrd(J, 2, {}, {}, 64);
    CHECK(w.w == Rational(1));
    std::vector<ExceptionalDivisor> bd{{1, 2, 0}};
    auto t0 = tState(w.w, w.locus, bd, 0);
    CHECK(t0.t == TValue{Rational(1), 1});
    REQUIRE(t0.components.size() == 1);
    CHECK(equalLoci(t0.components[0], I(rr, "x1, x3, x4")));

    // empty E^-: n = 0 and the component is the max-w-ord locus itself
    auto t1 = tState(w.w, w.locus, {}, 0);
    CHECK(t1.t == TValue{Rational(1), 0});
    REQUIRE(t1.components.size() == 1);
    CHECK(idealEqual(t1.components[0], w.locus));

    CHECK_THROWS(tState(Rational(0), w.locus, {}, 0));
}

TEST_CASE("t-invariant depends only on its data") {
    // recompute after a coordinate permutation: same value
    auto r = makeRing({"x", "y", "z"});
    Ideal J = I(r, "x^2 - y^2*z");
    auto w = maxWOrd(J, 1, {}, {}, 64);
    std::vector<ExceptionalDivisor> bd{{1, 1, 0}};
    auto t = tState(w.w, w.locus, bd, 0);

    auto rp = makeRing({"x", "y", "z"});
    std::vector<Polynomial> perm{Polynomial::variable(rp, 0), Polynomial::variable(rp, 2),
                                 Polynomial::variable(rp, 1)};
    Ideal Jp = idealSubstitute(J, perm, rp);
    auto wp = maxWOrd(Jp, 1, {}, {}, 64);
    std::vector<ExceptionalDivisor> bdp{{1, 2, 0}};
    auto tp = tState(wp.w, wp.locus, bdp, 0);
    CHECK(t.t == tp.t);
}

TEST_CASE("gamma invariant") {
    // two divisors with multiplicities 3, 3 against b = 2
    MonomialObjectData d0{{{1, 0, 3}, {2, 1, 3}}, 2};
    auto g0 = gammaMax(d0, 2);
    CHECK(g0.value == GammaValue{-1, Rational(3, 2), {2, 0}});
    CHECK(g0.centerLabels == std::vector<int>{2});

    MonomialObjectData d1{{{1, 0, 3}, {3, 1, 1}}, 2};
    auto g1 = gammaMax(d1, 2);
    CHECK(g1.value == GammaValue{-1, Rational(3, 2), {1, 0}});
    CHECK(g1.centerLabels == std::vector<int>{1});

    MonomialObjectData d2{{{3, 1, 1}, {4, 0, 1}}, 2};
    auto g2 = gammaMax(d2, 2);
    CHECK(g2.value == GammaValue{-2, Rational(1), {4, 3}});
    CHECK(g2.centerLabels.size() == 2);

    // single divisor, a = b
    MonomialObjectData d3{{{1, 0, 5}}, 5};
    auto g3 = gammaMax(d3, 3);
    CHECK(g3.value == GammaValue{-1, Rational(1), {1, 0, 0}});

    // center nonemptiness and the defining inequality
    for (auto& data : {d0, d1, d2, d3}) {
        auto g = gammaMax(data, 4);
        CHECK(!g.centerCoords.empty());
        uint64_t sum = 0;
        for (auto& d : data.divisors)
            for (int lbl : g.centerLabels)
                if (d.label == lbl) sum += d.mult;
        CHECK(sum >= data.b);
    }

    MonomialObjectData empty{{{1, 0, 1}}, 3};
    CHECK(monomialSingEmpty(empty));
    CHECK_THROWS(gammaMax(empty, 2));
}

TEST_CASE("fd trace ordering") {
    FdTrace caseA;
    caseA.levels = {{Rational(1), 1}, {Rational(1), 0}};
    caseA.terminal = FdTrace::Terminal::Divisor;

    FdTrace deeper;
    deeper.levels = {{Rational(1), 1}, {Rational(1), 0}, {Rational(1), 0}};
    deeper.terminal = FdTrace::Terminal::Divisor;
    // infinity dominates continued descent at an equal prefix
    CHECK(fdCompare(caseA, deeper) > 0);

    FdTrace smallerW;
    smallerW.levels = {{Rational(1, 2), 0}};
    smallerW.terminal = FdTrace::Terminal::Divisor;
    CHECK(fdCompare(smallerW, caseA) < 0);

    FdTrace mono;
    mono.levels = {{Rational(0), -1}};
    mono.terminal = FdTrace::Terminal::Gamma;
    mono.gamma = GammaValue{-1, Rational(2), {1, 0}};
    CHECK(fdCompare(mono, smallerW) < 0); // w-ord 0 sits below any positive w-ord

    FdTrace mono2 = mono;
    mono2.gamma = GammaValue{-1, Rational(3), {1, 0}};
    CHECK(fdCompare(mono, mono2) < 0);
    CHECK(fdCompare(mono, mono) == 0);
}
