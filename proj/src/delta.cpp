#include "desing/delta.hpp"

namespace desing {

Ideal deltaExtend(const Ideal& I, const std::vector<size_t>& activeVars) {
    std::vector<Polynomial> gens = I.gens;
    std::vector<size_t> vars = activeVars;
    if (vars.empty())
        for (size_t i = 0; i < I.ring->dim(); ++i) vars.push_back(i);
    for (auto& g : I.gens)
        for (size_t v : vars) {
            Polynomial d = g.derivative(v);
            if (!d.isZero()) gens.push_back(std::move(d));
        }
    return Ideal(I.ring, std::move(gens));
}

DeltaChain deltaChain(const Ideal& I, unsigned cap, const std::vector<size_t>& activeVars) {
    if (cap < 1) throw std::invalid_argument("deltaChain cap must be >= 1");
    DeltaChain chain;
    chain.base = I;
    Ideal cur = I;
    chain.powers.push_back(cur);
    for (unsigned i = 0; i < cap; ++i) {
        if (isTrivial(chain.powers.back())) break;
        cur = deltaExtend(cur, activeVars);
        chain.powers.push_back(cur);
    }
    return chain;
}

unsigned maxOrder(const Ideal& I, unsigned cap, const std::vector<size_t>& activeVars) {
    if (I.gens.empty()) throw std::domain_error("maxOrder of the zero ideal is unbounded");
    Ideal cur = I;
    unsigned b = 0;
    while (!isTrivial(cur)) {
        ++b;
        if (b > cap) throw std::runtime_error("maxOrder exceeded cap " + std::to_string(cap));
        cur = deltaExtend(cur, activeVars);
    }
    return b;
}

Ideal orderLocus(const Ideal& I, unsigned b, const std::vector<size_t>& activeVars) {
    if (b < 1) throw std::invalid_argument("orderLocus needs b >= 1");
    Ideal cur = I;
    for (unsigned i = 1; i < b; ++i) {
        if (isTrivial(cur)) break; // stays trivial under extension
        cur = deltaExtend(cur, activeVars);
    }
    return cur;
}

bool equalLoci(const Ideal& A, const Ideal& B) {
    if (!sameRing(A.ring, B.ring)) throw std::invalid_argument("ring mismatch in equalLoci");
    for (auto& g : A.gens)
        if (!radicalMembership(g, B)) return false;
    for (auto& g : B.gens)
        if (!radicalMembership(g, A)) return false;
    return true;
}

} // namespace desing
