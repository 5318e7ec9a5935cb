#include "desing/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace desing {

std::string gammaToString(const GammaValue& g) {
    std::ostringstream os;
    os << "(" << g.g1 << ", " << ratToString(g.g2) << ", (";
    for (size_t i = 0; i < g.g3.size(); ++i) {
        if (i) os << ",";
        os << g.g3[i];
    }
    os << "))";
    return os.str();
}

MaxWOrdResult maxWOrd(const Ideal& J, unsigned b, const std::vector<ExceptionalDivisor>& ownExc,
                      const std::vector<size_t>& flagCoords, unsigned deltaCap) {
    if (J.gens.empty()) throw std::domain_error("maxWOrd of the zero ideal");
    MaxWOrdResult out;
    auto [weak, mults] = weakTransformExtract(J, ownExc);
    out.weak = weak;
    out.mults = mults;
    Monomial excm(J.ring->dim());
    for (size_t i = 0; i < ownExc.size(); ++i) excm.e[ownExc[i].coord] += mults[i].second;
    out.excMonomial = Polynomial(J.ring, excm, 1);
    out.weakOrder = maxOrder(weak, deltaCap);
    out.w = Rational(out.weakOrder) / Rational(b);
    if (out.weakOrder == 0) {
        out.locus = Ideal(J.ring, {Polynomial(J.ring, Rational(1))}); // unit sentinel
        return out;
    }
    Ideal locus = orderLocus(weak, out.weakOrder);
    std::vector<Polynomial> gens = locus.gens;
    for (size_t f : flagCoords) gens.push_back(Polynomial::variable(J.ring, f));
    out.locus = Ideal(J.ring, std::move(gens));
    return out;
}

TStateResult tState(const Rational& w, const Ideal& locusIdeal,
                    const std::vector<ExceptionalDivisor>& registry, int ko, int maxEMinus) {
    if (w == 0) throw std::domain_error("tState undefined when max w-ord = 0");
    TStateResult out;
    std::vector<const ExceptionalDivisor*> eminus;
    for (auto& H : registry)
        if (H.birthStage <= ko) eminus.push_back(&H);
    for (auto& H : eminus) out.eMinusLabels.push_back(H->label);
    if (eminus.size() > static_cast<size_t>(maxEMinus))
        throw std::runtime_error("tState: |E^-| exceeds the subset-enumeration cap");

    const RingPtr& ring = locusIdeal.ring;
    size_t r = eminus.size();
    for (size_t m = r + 1; m-- > 0;) {
        bool found = false;
        // enumerate m-subsets of eminus
        std::vector<size_t> sel(m);
        for (size_t i = 0; i < m; ++i) sel[i] = i;
        while (true) {
            std::vector<Polynomial> gens = locusIdeal.gens;
            std::vector<int> labels;
            for (size_t i = 0; i < m; ++i) {
                gens.push_back(Polynomial::variable(ring, eminus[sel[i]]->coord));
                labels.push_back(eminus[sel[i]]->label);
            }
            Ideal meet(ring, std::move(gens));
            if (!isTrivial(meet)) {
                found = true;
                out.components.push_back(meet);
                out.componentLabels.push_back(labels);
            }
            // next combination
            if (m == 0) break;
            size_t i = m;
            while (i-- > 0) {
                if (sel[i] != i + r - m) {
                    ++sel[i];
                    for (size_t j = i + 1; j < m; ++j) sel[j] = sel[j - 1] + 1;
                    break;
                }
                if (i == 0) { i = SIZE_MAX; break; }
            }
            if (i == SIZE_MAX || m == 0) break;
        }
        if (found) {
            out.t = TValue{w, static_cast<int>(m)};
            return out;
        }
    }
    // locus itself is empty: caller should not have asked
    throw std::logic_error("tState: max-w-ord locus is empty");
}

bool monomialSingEmpty(const MonomialObjectData& data) {
    uint64_t total = 0;
    for (auto& d : data.divisors) total += d.mult;
    return total < data.b;
}

GammaResult gammaMax(const MonomialObjectData& data, size_t ambientDim) {
    size_t n = data.divisors.size();
    if (n > 20) throw std::runtime_error("gammaMax: too many divisors to enumerate");
    if (monomialSingEmpty(data)) throw std::domain_error("gammaMax on an empty singular locus");

    // minimal cardinality reaching the threshold
    size_t best = SIZE_MAX;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        uint64_t sum = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1) sum += data.divisors[i].mult;
        if (sum >= data.b) best = std::min<size_t>(best, __builtin_popcount(mask));
    }

    GammaResult out;
    bool seeded = false;
    uint32_t bestMask = 0;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (static_cast<size_t>(__builtin_popcount(mask)) != best) continue;
        uint64_t sum = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1) sum += data.divisors[i].mult;
        if (sum < data.b) continue;
        GammaValue g;
        g.g1 = -static_cast<int>(best);
        g.g2 = Rational(sum) / Rational(data.b);
        std::vector<int> labels;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1) labels.push_back(data.divisors[i].label);
        std::sort(labels.rbegin(), labels.rend());
        g.g3.assign(ambientDim, 0);
        for (size_t i = 0; i < labels.size() && i < ambientDim; ++i) g.g3[i] = labels[i];
        if (!seeded || gammaLess(out.value, g)) {
            out.value = g;
            bestMask = mask;
            seeded = true;
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (bestMask >> i & 1) {
            out.centerCoords.push_back(data.divisors[i].coord);
            out.centerLabels.push_back(data.divisors[i].label);
        }
    return out;
}

int fdCompare(const FdTrace& a, const FdTrace& b) {
    size_t n = std::min(a.levels.size(), b.levels.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.levels[i].w != b.levels[i].w) return a.levels[i].w < b.levels[i].w ? -1 : 1;
        if (a.levels[i].n != b.levels[i].n) return a.levels[i].n < b.levels[i].n ? -1 : 1;
    }
    if (a.levels.size() != b.levels.size()) {
        // shorter trace ends with a divisor terminal at the divergence level
        // and infinity dominates any continued descent
        return a.levels.size() < b.levels.size() ? 1 : -1;
    }
    if (a.terminal != b.terminal) {
        auto rank = [](FdTrace::Terminal t) {
            switch (t) {
                case FdTrace::Terminal::Resolved: return 0;
                case FdTrace::Terminal::Gamma: return 1;
                case FdTrace::Terminal::Divisor: return 2;
            }
            return 0;
        };
        return rank(a.terminal) < rank(b.terminal) ? -1 : 1;
    }
    if (a.terminal == FdTrace::Terminal::Gamma) {
        if (gammaLess(*a.gamma, *b.gamma)) return -1;
        if (gammaLess(*b.gamma, *a.gamma)) return 1;
    }
    return 0;
}

std::string fdToString(const FdTrace& t) {
    std::ostringstream os;
    for (auto& e : t.levels) {
        if (e.n >= 0)
            os << "(" << ratToString(e.w) << "; " << e.n << ") ";
        else
            os << "(" << ratToString(e.w) << ") ";
    }
    switch (t.terminal) {
        case FdTrace::Terminal::Divisor: os << "∞"; break;
        case FdTrace::Terminal::Gamma: {
            const GammaValue& g = *t.gamma;
            os << "Γ(" << g.g1 << "," << ratToString(g.g2) << ",[";
            for (size_t i = 0; i < g.g3.size(); ++i) {
                if (i) os << ",";
                os << g.g3[i];
            }
            os << "])";
            break;
        }
        case FdTrace::Terminal::Resolved: os << "resolved"; break;
    }
    return os.str();
}

} // namespace desing
