#include "desing/groebner.hpp"

#include <algorithm>
#include <deque>

namespace desing {

namespace {

struct Lead {
    Monomial m;
    Rational c;
};

Lead leadOf(const Polynomial& f, TermOrder ord) {
    auto l = f.leading(ord);
    return {l->first, l->second};
}

// one top-reduction pass over every term of f
Polynomial reduceFull(Polynomial f, const std::vector<Polynomial>& basis, TermOrder ord) {
    if (basis.empty()) return f;
    Polynomial rem(f.ring());
    std::vector<Lead> leads;
    leads.reserve(basis.size());
    for (auto& g : basis) leads.push_back(leadOf(g, ord));
    while (!f.isZero()) {
        auto lf = leadOf(f, ord);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (monoDivides(leads[i].m, lf.m)) {
                Monomial q = monoDiv(lf.m, leads[i].m);
                Rational s = lf.c / leads[i].c;
                f = f - basis[i] * Polynomial(f.ring(), q, s);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.addTerm(lf.m, lf.c);
            f.addTerm(lf.m, -lf.c);
        }
    }
    return rem;
}

} // namespace

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis, TermOrder ord) {
    return reduceFull(f, basis, ord);
}

std::vector<Polynomial> groebner(const Ideal& I, TermOrder ord) {
    std::vector<Polynomial> G;
    for (auto& g : I.gens)
        if (!g.isZero()) G.push_back(g.monic());
    if (G.empty()) return G;

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Lead li = leadOf(G[i], ord), lj = leadOf(G[j], ord);
        Monomial l = monoLcm(li.m, lj.m);
        // Buchberger's first criterion: coprime leading monomials
        if (l.degree() == li.m.degree() + lj.m.degree()) continue;
        Polynomial spoly = G[i] * Polynomial(G[i].ring(), monoDiv(l, li.m), Rational(1) / li.c) -
                           G[j] * Polynomial(G[j].ring(), monoDiv(l, lj.m), Rational(1) / lj.c);
        Polynomial r = reduceFull(spoly, G, ord);
        if (r.isZero()) continue;
        r = r * (Rational(1) / r.leading(ord)->second);
        size_t k = G.size();
        G.push_back(r);
        for (size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
        // shortcut: a constant ends it
        if (r.isConstant()) break;
    }

    if (std::any_of(G.begin(), G.end(), [](const Polynomial& g) { return g.isConstant(); })) {
        return {Polynomial(I.ring, Rational(1))};
    }

    // minimalize: drop members whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        Monomial mi = leadOf(G[i], ord).m;
        bool covered = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            Monomial mj = leadOf(G[j], ord).m;
            if (monoDivides(mj, mi) && !(mj == mi && j > i)) { covered = true; break; }
        }
        if (!covered) minimal.push_back(G[i]);
    }
    // interreduce tails
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduceFull(minimal[i], others, ord);
        if (!r.isZero()) reduced.push_back(r * (Rational(1) / r.leading(ord)->second));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monoLess(a.leading(ord)->first, b.leading(ord)->first, ord);
    });
    return reduced;
}

Ideal groebnerBasis(const Ideal& I, TermOrder ord) {
    Ideal out = I;
    out.cachedGroebner = std::make_shared<const std::vector<Polynomial>>(groebner(I, ord));
    return out;
}

static const std::vector<Polynomial>& basisFor(const Ideal& I, std::vector<Polynomial>& scratch) {
    if (I.cachedGroebner) return *I.cachedGroebner;
    scratch = groebner(I, TermOrder::DegRevLex);
    return scratch;
}

bool isTrivial(const Ideal& I) {
    std::vector<Polynomial> scratch;
    const auto& B = basisFor(I, scratch);
    return B.size() == 1 && B[0].isConstant() && !B[0].isZero();
}

bool idealContains(const std::vector<Polynomial>& basis, const Polynomial& f, TermOrder ord) {
    return normalForm(f, basis, ord).isZero();
}

bool idealContains(const Ideal& I, const Polynomial& f) {
    std::vector<Polynomial> scratch;
    const auto& B = basisFor(I, scratch);
    return idealContains(B, f, TermOrder::DegRevLex);
}

bool idealEqual(const Ideal& A, const Ideal& B) {
    if (!sameRing(A.ring, B.ring)) return false;
    std::vector<Polynomial> sa, sb;
    const auto& BA = basisFor(A, sa);
    const auto& BB = basisFor(B, sb);
    for (auto& g : A.gens)
        if (!idealContains(BB, g, TermOrder::DegRevLex)) return false;
    for (auto& g : B.gens)
        if (!idealContains(BA, g, TermOrder::DegRevLex)) return false;
    return true;
}

bool radicalMembership(const Polynomial& f, const Ideal& I) {
    if (f.isZero()) return true;
    // fresh variable name
    std::string t = "_t";
    while (I.ring->indexOf(t) >= 0) t += "_";
    RingPtr ext = extendRing(I.ring, t);
    size_t d = I.ring->dim();
    std::vector<Polynomial> images;
    images.reserve(d);
    for (size_t i = 0; i < d; ++i) images.push_back(Polynomial::variable(ext, i));
    std::vector<Polynomial> gens;
    for (auto& g : I.gens) gens.push_back(g.substitute(images, ext));
    Polynomial fe = f.substitute(images, ext);
    gens.push_back(Polynomial(ext, Rational(1)) - Polynomial::variable(ext, d) * fe);
    return isTrivial(Ideal(ext, std::move(gens)));
}

int krullDimension(const Ideal& I) {
    std::vector<Polynomial> scratch;
    const auto& B = basisFor(I, scratch);
    if (B.size() == 1 && B[0].isConstant() && !B[0].isZero()) return -1;
    size_t d = I.ring->dim();
    if (B.empty()) return static_cast<int>(d); // zero ideal: the whole space
    std::vector<Monomial> lts;
    for (auto& g : B) lts.push_back(g.leading(TermOrder::DegRevLex)->first);
    // S independent iff no leading monomial is supported inside S
    int best = 0;
    for (uint64_t mask = 0; mask < (1ull << d); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size <= best) continue;
        bool indep = true;
        for (auto& m : lts) {
            bool inside = true;
            for (size_t i = 0; i < d; ++i)
                if (m.e[i] && !(mask >> i & 1)) { inside = false; break; }
            if (inside) { indep = false; break; }
        }
        if (indep) best = size;
    }
    return best;
}

} // namespace desing
