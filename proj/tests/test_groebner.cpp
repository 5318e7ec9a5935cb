#include <doctest.h>

#include "desing/groebner.hpp"
#include "desing/parse.hpp"

using namespace desing;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) { return parsePolynomial(s, r); }

Ideal I(const RingPtr& r, const std::string& gens) { return Ideal(r, parsePolynomialList(gens, r)); }
} // namespace

TEST_CASE("groebner basics") {
    auto r = makeRing({"x", "y"});
    CHECK(idealEqual(groebnerBasis(I(r, "x + y, x - y")), I(r, "x, y")));

    // <x^2, xy>: the single S-polynomial reduces to 0, so the input is
    // already a basis (hand Buchberger: S = y*x^2 - x*xy = 0)
    Ideal J = I(r, "x^2, x*y");
    auto B = groebner(J);
    CHECK(idealEqual(Ideal(r, B), J));
    CHECK(B.size() == 2);

    auto one = groebner(I(r, "x, 1 - x"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].isConstant());
}

TEST_CASE("triviality") {
    auto r = makeRing({"x", "y"});
    CHECK(isTrivial(I(r, "x, 1 - x")));
    CHECK(!isTrivial(I(r, "x, y^2")));
    CHECK(isTrivial(I(r, "2")));
    CHECK(!isTrivial(Ideal(r))); // zero ideal
}

TEST_CASE("radical membership") {
    auto r = makeRing({"x", "y"});
    CHECK(radicalMembership(P(r, "x"), I(r, "x^2")));
    CHECK(!radicalMembership(P(r, "y"), I(r, "x^2")));
    CHECK(!radicalMembership(P(r, "1 + y^2"), I(r, "x")));
}

TEST_CASE("ideal composition") {
    auto r = makeRing({"x", "y", "z"});
    CHECK(idealEqual(idealSum(I(r, "x"), I(r, "y")), I(r, "x, y")));
    CHECK(idealEqual(idealPower(I(r, "x, y"), 2), I(r, "x^2, x*y, y^2")));
    CHECK(idealEqual(idealProduct(I(r, "x"), I(r, "y, z")), I(r, "x*y, x*z")));
    CHECK_THROWS(idealPower(I(r, "x"), 0));
}

// combinatorial dimension oracle for monomial ideals: max |S| such that no
// generator monomial is supported inside S
static int monomialDimOracle(const Ideal& I) {
    size_t d = I.ring->dim();
    int best = -1;
    for (uint64_t mask = 0; mask < (1ull << d); ++mask) {
        bool indep = true;
        for (auto& g : I.gens) {
            auto& m = g.terms().begin()->first;
            bool inside = true;
            for (size_t i = 0; i < d; ++i)
                if (m.e[i] && !(mask >> i & 1)) { inside = false; break; }
            if (inside) { indep = false; break; }
        }
        if (indep) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

TEST_CASE("krull dimension") {
    auto r = makeRing({"x", "y", "z"});
    CHECK(krullDimension(I(r, "x")) == 2);
    CHECK(krullDimension(I(r, "x, y, z")) == 0);
    Ideal J = I(r, "x*y");
    CHECK(krullDimension(J) == 2);
    CHECK(krullDimension(J) == monomialDimOracle(J));
    CHECK(krullDimension(I(r, "1")) == -1);
}

TEST_CASE("lex order basis") {
    auto r = makeRing({"x", "y"});
    // elimination: lex basis of <x - y^2, x*y - 1> contains a univariate in y
    Ideal J = I(r, "x - y^2, x*y - 1");
    auto B = groebner(J, TermOrder::Lex);
    bool univariate = false;
    for (auto& g : B) {
        bool onlyY = true;
        for (auto& [m, c] : g.terms())
            if (m.e[0]) onlyY = false;
        if (onlyY && !g.isConstant()) univariate = true;
    }
    CHECK(univariate);
    CHECK(idealEqual(Ideal(r, B), J));
}

TEST_CASE("cached basis generates the same ideal") {
    auto r = makeRing({"x", "y"});
    Ideal J = I(r, "x^2 - y^3, x*y - x");
    Ideal withBasis = groebnerBasis(J);
    REQUIRE(withBasis.cachedGroebner);
    Ideal basisIdeal(r, *withBasis.cachedGroebner);
    CHECK(idealEqual(basisIdeal, J)); // mutual membership
    CHECK_THROWS(idealSum(J, I(makeRing({"z"}), "z")));
}
