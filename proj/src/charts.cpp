#include "desing/charts.hpp"

#include <algorithm>

namespace desing {

CoordinateChange swapChange(const RingPtr& ring, size_t i, size_t j) {
    std::vector<Polynomial> img;
    for (size_t k = 0; k < ring->dim(); ++k) {
        size_t t = k == i ? j : (k == j ? i : k);
        img.push_back(Polynomial::variable(ring, t));
    }
    CoordinateChange ch{CoordinateChange::Kind::AffineLinear, img, img,
                        "swap " + ring->vars[i] + "," + ring->vars[j]};
    return ch;
}

CoordinateChange triangularChange(const RingPtr& ring, size_t target, const Rational& scale,
                                  const Polynomial& shift) {
    if (scale == 0) throw std::invalid_argument("triangular change needs nonzero scale");
    for (auto& [m, c] : shift.terms())
        if (m.e[target]) throw std::invalid_argument("triangular shift must omit its target variable");
    std::vector<Polynomial> img, inv;
    for (size_t k = 0; k < ring->dim(); ++k) {
        if (k == target) {
            img.push_back(Polynomial::variable(ring, k) * scale + shift);
            inv.push_back((Polynomial::variable(ring, k) - shift) * (Rational(1) / scale));
        } else {
            img.push_back(Polynomial::variable(ring, k));
            inv.push_back(Polynomial::variable(ring, k));
        }
    }
    return CoordinateChange{CoordinateChange::Kind::Triangular, std::move(img), std::move(inv),
                            "triangular " + ring->vars[target]};
}

std::vector<Polynomial> blowupImages(const RingPtr& ring, const std::vector<size_t>& M, size_t m) {
    std::vector<Polynomial> img;
    Polynomial xm = Polynomial::variable(ring, m);
    for (size_t k = 0; k < ring->dim(); ++k) {
        bool inM = std::find(M.begin(), M.end(), k) != M.end();
        if (inM && k != m)
            img.push_back(xm * Polynomial::variable(ring, k));
        else
            img.push_back(Polynomial::variable(ring, k));
    }
    return img;
}

std::optional<size_t> strictTransformHyperplane(size_t j, const std::vector<size_t>& M, size_t m) {
    (void)M; // only membership of j relative to m matters for the index
    if (j == m) return std::nullopt; // swallowed by the exceptional divisor in this chart
    return j;                        // x_j unchanged, both for j in M\{m} and j outside M
}

std::vector<Chart> blowupCoordinateCenter(const Chart& chart, const std::vector<size_t>& M,
                                          int stage, int newLabel) {
    if (M.empty()) throw std::invalid_argument("empty blowup center");
    for (size_t j : M)
        if (j >= chart.ring->dim()) throw std::out_of_range("blowup center variable index");
    std::vector<Chart> children;
    for (size_t idx = 0; idx < M.size(); ++idx) {
        size_t m = M[idx];
        Chart child;
        child.parentId = chart.id;
        child.branchIndex = static_cast<int>(idx);
        child.bornStage = stage;
        child.ring = chart.ring;
        child.trail = chart.trail;
        child.trail.push_back(BlowupStep{M, m, stage});
        child.flag = chart.flag;
        for (auto& H : chart.exceptionals) {
            auto kept = strictTransformHyperplane(H.coord, M, m);
            if (kept) child.exceptionals.push_back({H.label, *kept, H.birthStage});
            // divisors at coordinate m leave the chart; the |M| = 1 relabeling
            // is exactly the disappearance of the old divisor plus the fresh
            // registration below at the same coordinate
        }
        child.exceptionals.push_back({newLabel, m, stage});
        children.push_back(std::move(child));
    }
    return children;
}

Ideal controlledTransform(const Ideal& pulledBack, unsigned b, size_t excCoord) {
    if (pulledBack.gens.empty()) throw std::domain_error("controlled transform of the zero ideal");
    if (idealCoordValuation(pulledBack, excCoord) < b)
        throw NotDivisible("pullback not divisible by exceptional^" + std::to_string(b) +
                           " at coordinate " + pulledBack.ring->vars[excCoord]);
    return idealDivideByCoordPower(pulledBack, excCoord, b);
}

std::pair<Ideal, std::vector<std::pair<int, uint32_t>>> weakTransformExtract(
    const Ideal& J, const std::vector<ExceptionalDivisor>& exc) {
    Ideal cur = J;
    std::vector<std::pair<int, uint32_t>> mults;
    for (auto& H : exc) {
        uint32_t a = cur.gens.empty() ? 0 : idealCoordValuation(cur, H.coord);
        if (a > 0) cur = idealDivideByCoordPower(cur, H.coord, a);
        mults.emplace_back(H.label, a);
    }
    return {cur, mults};
}

std::vector<Ideal> applyChangeToIdeals(const CoordinateChange& change, const std::vector<Ideal>& ideals) {
    std::vector<Ideal> out;
    out.reserve(ideals.size());
    for (auto& I : ideals) out.push_back(idealSubstitute(I, change.images, I.ring));
    return out;
}

} // namespace desing
