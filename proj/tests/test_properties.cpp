#include <doctest.h>

#include <random>

#include "desing/delta.hpp"
#include "desing/gcd.hpp"

using namespace desing;

namespace {

Polynomial randomPoly(std::mt19937& rng, const RingPtr& ring, int maxTerms, uint32_t maxExp) {
    std::uniform_int_distribution<int> nt(1, maxTerms);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<uint32_t> ex(0, maxExp);
    Polynomial f(ring);
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        Monomial m(ring->dim());
        for (size_t i = 0; i < ring->dim(); ++i) m.e[i] = ex(rng);
        f.addTerm(m, Rational(c));
    }
    return f;
}

Ideal randomIdeal(std::mt19937& rng, const RingPtr& ring, int maxGens, int maxTerms, uint32_t maxExp) {
    std::uniform_int_distribution<int> ng(1, maxGens);
    std::vector<Polynomial> gens;
    int n = ng(rng);
    for (int i = 0; i < n; ++i) {
        Polynomial f = randomPoly(rng, ring, maxTerms, maxExp);
        if (!f.isZero()) gens.push_back(f);
    }
    if (gens.empty()) gens.push_back(Polynomial::variable(ring, 0));
    return Ideal(ring, std::move(gens));
}

} // namespace

TEST_CASE("Buchberger soundness on random small ideals") {
    std::mt19937 rng(20240817);
    auto ring = makeRing({"x", "y", "z"});
    for (int round = 0; round < 40; ++round) {
        Ideal I = randomIdeal(rng, ring, 3, 3, 3);
        auto B = groebner(I);
        if (B.empty()) continue;
        // every original generator reduces to zero against the basis
        for (auto& g : I.gens) CHECK(normalForm(g, B, TermOrder::DegRevLex).isZero());
        // every S-polynomial of the basis reduces to zero (completeness)
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t j = i + 1; j < B.size(); ++j) {
                auto li = B[i].leading(TermOrder::DegRevLex);
                auto lj = B[j].leading(TermOrder::DegRevLex);
                Monomial l = monoLcm(li->first, lj->first);
                Polynomial s =
                    B[i] * Polynomial(ring, monoDiv(l, li->first), Rational(1) / li->second) -
                    B[j] * Polynomial(ring, monoDiv(l, lj->first), Rational(1) / lj->second);
                CHECK(normalForm(s, B, TermOrder::DegRevLex).isZero());
            }
        // membership both ways across two independent orders
        auto L = groebner(I, TermOrder::Lex);
        for (auto& g : B) CHECK(normalForm(g, L, TermOrder::Lex).isZero());
        for (auto& g : L) CHECK(normalForm(g, B, TermOrder::DegRevLex).isZero());
    }
}

TEST_CASE("triviality agrees with the evaluation oracle on monomial ideals") {
    std::mt19937 rng(7);
    auto ring = makeRing({"x", "y", "z"});
    std::uniform_int_distribution<uint32_t> ex(0, 2);
    for (int round = 0; round < 60; ++round) {
        std::vector<Polynomial> gens;
        int n = 1 + static_cast<int>(rng() % 3);
        bool hasConstant = false;
        for (int i = 0; i < n; ++i) {
            Monomial m(3);
            for (size_t v = 0; v < 3; ++v) m.e[v] = ex(rng);
            if (m.isOne()) hasConstant = true;
            gens.push_back(Polynomial(ring, m, 1));
        }
        Ideal I(ring, gens);
        // a monomial ideal is trivial iff a generator is constant; otherwise
        // the origin is a common root
        CHECK(isTrivial(I) == hasConstant);
    }
}

TEST_CASE("randomized order characterization") {
    // nu_p(I) >= b iff p kills Delta^{b-1}(I); Taylor-shift scan is the oracle
    std::mt19937 rng(99);
    auto ring = makeRing({"x", "y"});
    std::uniform_int_distribution<int> pt(-2, 2);
    int checked = 0;
    for (int round = 0; round < 30; ++round) {
        Ideal I = randomIdeal(rng, ring, 2, 3, 3);
        for (unsigned b = 1; b <= 3; ++b) {
            Ideal locus = orderLocus(I, b);
            for (int k = 0; k < 3; ++k) {
                std::vector<Rational> p{Rational(pt(rng)), Rational(pt(rng))};
                bool kills = true;
                for (auto& g : locus.gens)
                    if (g.evaluate(p) != 0) { kills = false; break; }
                uint64_t order = orderAtRationalPoint(I, p);
                CHECK(kills == (order >= b));
                ++checked;
            }
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("random gcds divide and leave coprime cofactors") {
    std::mt19937 rng(4242);
    auto ring = makeRing({"x", "y"});
    for (int round = 0; round < 25; ++round) {
        Polynomial a = randomPoly(rng, ring, 2, 2);
        Polynomial b = randomPoly(rng, ring, 2, 2);
        Polynomial c = randomPoly(rng, ring, 2, 2);
        if (a.isZero() || b.isZero() || c.isZero()) continue;
        Polynomial f = a * c, g = b * c;
        Polynomial d = gcdMultivariate(f, g);
        Polynomial qf = exactDivide(f, d);
        Polynomial qg = exactDivide(g, d);
        CHECK(qf * d == f.monic() * f.leading(TermOrder::DegRevLex)->second);
        CHECK(gcdMultivariate(qf, qg).isConstant());
    }
}

TEST_CASE("delta chain nesting on random ideals") {
    std::mt19937 rng(321);
    auto ring = makeRing({"x", "y"});
    for (int round = 0; round < 15; ++round) {
        Ideal I = randomIdeal(rng, ring, 2, 2, 3);
        auto chain = deltaChain(I, 12);
        for (size_t i = 0; i + 1 < chain.powers.size(); ++i) {
            Ideal next = groebnerBasis(chain.powers[i + 1]);
            for (auto& g : chain.powers[i].gens) CHECK(idealContains(next, g));
        }
    }
}

#include "desing/resolver.hpp"

TEST_CASE("random small resolutions terminate or halt honestly") {
    std::mt19937 rng(2718);
    auto ring = makeRing({"x", "y"});
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<uint32_t> ex(0, 3);
    std::uniform_int_distribution<int> nt(1, 2), bb(1, 2);
    int completed = 0, halted = 0;
    for (int round = 0; round < 25; ++round) {
        Polynomial f(ring);
        int terms = nt(rng) + 1;
        for (int t = 0; t < terms; ++t) {
            int c = coeff(rng);
            if (c == 0) c = 1;
            Monomial m(2);
            m.e = {ex(rng), ex(rng)};
            f.addTerm(m, Rational(c));
        }
        if (f.isZero() || f.isConstant()) continue;
        unsigned b = static_cast<unsigned>(bb(rng));
        ResolveOptions opts;
        opts.maxStages = 24;
        ResolutionTree tree = resolveBasicObject(ring, Ideal(ring, {f}), b, {}, opts);
        CHECK(tree.audit.allOk());
        for (size_t i = 0; i + 1 < tree.stages.size(); ++i)
            CHECK(fdCompare(tree.stages[i + 1].fd, tree.stages[i].fd) < 0);
        if (tree.halt == HaltReason::None)
            ++completed;
        else
            ++halted;
        // honesty: a halt must leave a diagnosed stage or a capped status
        if (tree.halt == HaltReason::NonConvertible ||
            tree.halt == HaltReason::NonCoordinateCenter) {
            bool diagnosed = false;
            for (auto& s : tree.stages)
                if (s.halt != HaltReason::None) diagnosed = true;
            CHECK(diagnosed);
        }
    }
    CHECK(completed >= 5); // the corpus is mostly resolvable at this scale
}

TEST_CASE("random monomial endgames resolve combinatorially") {
    std::mt19937 rng(1618);
    auto ring = makeRing({"x", "y", "z"});
    std::uniform_int_distribution<uint32_t> mult(0, 4);
    std::uniform_int_distribution<unsigned> bb(1, 3);
    for (int round = 0; round < 20; ++round) {
        std::vector<MonoDivisor> divs;
        int label = 0;
        for (size_t c = 0; c < 3; ++c) {
            uint32_t a = mult(rng);
            if (a >= 1) divs.push_back({++label, c, a});
        }
        if (divs.empty()) continue;
        unsigned b = bb(rng);
        ResolutionTree tree = resolveMonomial(ring, divs, b);
        CHECK(tree.halt == HaltReason::None);
        // strict Gamma descent across stages
        for (size_t i = 0; i + 1 < tree.stages.size(); ++i) {
            REQUIRE(tree.stages[i].gamma);
            REQUIRE(tree.stages[i + 1].gamma);
            CHECK(gammaLess(*tree.stages[i + 1].gamma, *tree.stages[i].gamma));
        }
        for (auto& n : tree.nodes) {
            bool leaf = true;
            for (auto& m : tree.nodes)
                if (m.parent == n.id) leaf = false;
            if (leaf) CHECK(n.status == LeafStatus::Resolved);
        }
    }
}
