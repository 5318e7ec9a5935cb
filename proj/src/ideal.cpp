#include "desing/ideal.hpp"

#include <sstream>

namespace desing {

Ideal::Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)) {
    gens = pruneGenerators(std::move(g));
}

std::vector<Polynomial> pruneGenerators(std::vector<Polynomial> in) {
    // monic + dedupe
    std::vector<Polynomial> uniq;
    for (auto& g : in) {
        if (g.isZero()) continue;
        Polynomial gm = g.monic();
        bool dup = false;
        for (auto& h : uniq)
            if (h == gm) { dup = true; break; }
        if (!dup) uniq.push_back(std::move(gm));
    }
    // minimal monomial generators
    std::vector<Monomial> monos;
    for (auto& g : uniq)
        if (g.terms().size() == 1) monos.push_back(g.terms().begin()->first);
    std::vector<Monomial> minimal;
    for (auto& m : monos) {
        bool covered = false;
        for (auto& d : monos)
            if (d != m && monoDivides(d, m)) { covered = true; break; }
        if (!covered) minimal.push_back(m);
    }
    // keep a generator unless some minimal monomial divides every term of it
    std::vector<Polynomial> out;
    for (auto& g : uniq) {
        bool isMono = g.terms().size() == 1;
        const Monomial* self = isMono ? &g.terms().begin()->first : nullptr;
        bool red = false;
        for (auto& d : minimal) {
            if (self && d == *self) continue;
            bool all = true;
            for (auto& [m, c] : g.terms())
                if (!monoDivides(d, m)) { all = false; break; }
            if (all) { red = true; break; }
        }
        if (!red) out.push_back(g);
    }
    return out;
}

Ideal makeIdeal(const RingPtr& ring, std::vector<Polynomial> gens) {
    return Ideal(ring, std::move(gens));
}

Ideal idealSum(const Ideal& a, const Ideal& b) {
    if (!sameRing(a.ring, b.ring)) throw std::invalid_argument("ring mismatch in ideal sum");
    std::vector<Polynomial> g = a.gens;
    g.insert(g.end(), b.gens.begin(), b.gens.end());
    return Ideal(a.ring, std::move(g));
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
    if (!sameRing(a.ring, b.ring)) throw std::invalid_argument("ring mismatch in ideal product");
    std::vector<Polynomial> g;
    for (auto& f : a.gens)
        for (auto& h : b.gens) g.push_back(f * h);
    return Ideal(a.ring, std::move(g));
}

Ideal idealPower(const Ideal& a, unsigned n) {
    if (n < 1) throw std::invalid_argument("ideal power exponent must be >= 1");
    Ideal acc = a;
    for (unsigned i = 1; i < n; ++i) acc = idealProduct(acc, a);
    return acc;
}

uint32_t idealCoordValuation(const Ideal& I, size_t var) {
    if (I.gens.empty()) throw std::domain_error("coordinate valuation of the zero ideal");
    uint32_t v = UINT32_MAX;
    for (auto& g : I.gens) v = std::min(v, g.coordinateValuation(var));
    return v;
}

Ideal idealDivideByCoordPower(const Ideal& I, size_t var, uint32_t k) {
    std::vector<Polynomial> g;
    g.reserve(I.gens.size());
    for (auto& f : I.gens) g.push_back(f.divideByCoordPower(var, k));
    return Ideal(I.ring, std::move(g));
}

uint64_t orderAtRationalPoint(const Ideal& I, const std::vector<Rational>& p) {
    if (I.gens.empty()) throw std::domain_error("order of the zero ideal");
    uint64_t best = UINT64_MAX;
    for (auto& g : I.gens) best = std::min(best, g.orderAtPoint(p));
    return best;
}

Ideal idealSubstitute(const Ideal& I, const std::vector<Polynomial>& images, const RingPtr& target) {
    std::vector<Polynomial> g;
    g.reserve(I.gens.size());
    for (auto& f : I.gens) g.push_back(f.substitute(images, target));
    return Ideal(target, std::move(g));
}

std::string idealToString(const Ideal& I) {
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < I.gens.size(); ++i) {
        if (i) os << ", ";
        os << I.gens[i].toString();
    }
    os << ">";
    return os.str();
}

} // namespace desing
