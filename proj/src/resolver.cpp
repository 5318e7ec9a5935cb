#include "desing/resolver.hpp"

#include <algorithm>
#include <sstream>

#include "desing/gcd.hpp"

namespace desing {

namespace {

Ideal idealFromCoords(const RingPtr& ring, const std::vector<size_t>& coords) {
    std::vector<Polynomial> gens;
    for (size_t c : coords) gens.push_back(Polynomial::variable(ring, c));
    return Ideal(ring, std::move(gens));
}

std::vector<size_t> flagsAbove(const Chart& chart, size_t levelIdx) {
    std::vector<size_t> out;
    for (size_t i = 0; i < levelIdx && i < chart.flag.size(); ++i) out.push_back(chart.flag[i]);
    return out;
}

std::vector<size_t> activeVarsFor(const Chart& chart, size_t levelIdx) {
    std::vector<size_t> out;
    for (size_t v = 0; v < chart.ring->dim(); ++v) {
        bool frozen = false;
        for (size_t i = 0; i < levelIdx && i < chart.flag.size(); ++i)
            if (chart.flag[i] == v) { frozen = true; break; }
        if (!frozen) out.push_back(v);
    }
    return out;
}

std::vector<ExceptionalDivisor> ownExcOf(const LevelState& L) {
    std::vector<ExceptionalDivisor> out;
    for (auto& H : L.registry)
        if (H.birthStage >= 1) out.push_back(H);
    return out;
}

MonomialObjectData monomialDataOf(const LevelState& L) {
    MonomialObjectData data;
    data.b = L.threshold;
    for (auto& H : L.registry) {
        uint32_t a = idealCoordValuation(L.J, H.coord);
        if (a >= 1) data.divisors.push_back({H.label, H.coord, a});
    }
    return data;
}

Ideal restrictToHyperplane(const Ideal& I, size_t j) {
    std::vector<Polynomial> images;
    for (size_t v = 0; v < I.ring->dim(); ++v)
        images.push_back(v == j ? Polynomial(I.ring) : Polynomial::variable(I.ring, v));
    return idealSubstitute(I, images, I.ring);
}

std::string substitutionText(const RingPtr& ring, const std::vector<size_t>& M, size_t m) {
    std::ostringstream os;
    bool first = true;
    for (size_t j : M) {
        if (!first) os << ", ";
        first = false;
        os << ring->vars[j] << " -> ";
        if (j == m)
            os << ring->vars[m];
        else
            os << ring->vars[m] << "*" << ring->vars[j];
    }
    return os.str();
}

// terms of g containing x_j must be the single monomial c*x_j
std::optional<Rational> pureCoordinateCoeff(const Polynomial& g, size_t j) {
    std::optional<Rational> c;
    for (auto& [m, coeff] : g.terms()) {
        if (m.e[j] == 0) continue;
        if (m.e[j] != 1 || m.degree() != 1) return std::nullopt;
        if (c) return std::nullopt;
        c = coeff;
    }
    return c;
}

} // namespace

std::pair<Ideal, unsigned> makeJPrime(const MaxWOrdResult& wdata, unsigned b, const RingPtr& ring) {
    if (wdata.weakOrder == 0) throw std::domain_error("makeJPrime with max w-ord = 0");
    unsigned bk = wdata.weakOrder; // b * max w-ord
    if (bk >= b) return {wdata.weak, bk};
    if (wdata.excMonomial.isConstant())
        throw std::logic_error("makeJPrime: w-ord < 1 without exceptional part");
    Ideal mono(ring, {wdata.excMonomial});
    Ideal Jp = idealSum(idealPower(wdata.weak, b - bk), idealPower(mono, bk));
    return {Jp, bk * (b - bk)};
}

std::pair<Ideal, unsigned> makeJDoublePrime(const Ideal& Jp, unsigned bp, int n,
                                            const std::vector<ExceptionalDivisor>& eminus,
                                            const RingPtr& ring, size_t maxGenerators) {
    if (n <= 0) return {Jp, bp};
    size_t r = eminus.size();
    if (static_cast<size_t>(n) > r) throw std::logic_error("makeJDoublePrime: n exceeds |E^-|");
    // product over all n-subsets of (sum of the divisor ideals)^{bp}
    Ideal prod(ring, {Polynomial(ring, Rational(1))});
    std::vector<size_t> sel(n);
    for (int i = 0; i < n; ++i) sel[i] = i;
    while (true) {
        std::vector<Polynomial> coordGens;
        for (int i = 0; i < n; ++i) coordGens.push_back(Polynomial::variable(ring, eminus[sel[i]].coord));
        Ideal factor = idealPower(Ideal(ring, coordGens), bp);
        prod = idealProduct(prod, factor);
        if (prod.gens.size() > maxGenerators)
            throw std::runtime_error("makeJDoublePrime: generator explosion");
        // next n-combination
        int i = n;
        bool done = true;
        while (i-- > 0) {
            if (sel[i] != i + r - n) {
                ++sel[i];
                for (int k = i + 1; k < n; ++k) sel[k] = sel[k - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return {idealSum(Jp, prod), bp};
}

std::optional<MaximalContact> findMaximalContact(const Ideal& Jpp, unsigned bpp,
                                                 const std::vector<size_t>& activeVars,
                                                 const std::set<size_t>& forbiddenForChange,
                                                 unsigned deltaCap,
                                                 const std::set<size_t>& excludedCoords) {
    (void)deltaCap;
    Ideal D = orderLocus(Jpp, bpp);
    auto isActive = [&](size_t v) {
        return std::find(activeVars.begin(), activeVars.end(), v) != activeVars.end();
    };
    // pass 1: pure coordinate generators
    std::optional<size_t> best;
    for (auto& g : D.gens) {
        if (g.terms().size() != 1) continue;
        auto& [m, c] = *g.terms().begin();
        if (m.degree() != 1) continue;
        size_t j = 0;
        for (size_t v = 0; v < m.e.size(); ++v)
            if (m.e[v]) { j = v; break; }
        if (!isActive(j) || excludedCoords.count(j)) continue;
        if (!best || j < *best) best = j;
    }
    if (best) return MaximalContact{*best, std::nullopt};
    // pass 2: c*x_j + h with h free of x_j, convertible by a triangular change
    for (size_t j : activeVars) {
        if (forbiddenForChange.count(j) || excludedCoords.count(j)) continue;
        for (auto& g : D.gens) {
            auto c = pureCoordinateCoeff(g, j);
            if (!c || *c == 0) continue;
            Polynomial h = g - Polynomial::variable(Jpp.ring, j) * (*c);
            Polynomial shift = h * (Rational(-1) / *c);
            CoordinateChange ch = triangularChange(Jpp.ring, j, Rational(1) / *c, shift);
            return MaximalContact{j, ch};
        }
    }
    return std::nullopt;
}

std::pair<Ideal, unsigned> coefficientIdeal(const Ideal& Jpp, unsigned bpp, size_t hyperplane,
                                            size_t maxGenerators) {
    if (bpp == 0) throw std::invalid_argument("coefficientIdeal needs b'' >= 1");
    if (bpp > 10) throw std::runtime_error("coefficientIdeal: factorial threshold too large");
    unsigned fact = static_cast<unsigned>(factorialInt(bpp).convert_to<unsigned long>());
    Ideal C(Jpp.ring);
    Ideal cur = Jpp;
    for (unsigned i = 0; i < bpp; ++i) {
        Ideal restricted = restrictToHyperplane(cur, hyperplane);
        if (!restricted.gens.empty()) {
            Ideal powered = idealPower(restricted, fact / (bpp - i));
            C = C.gens.empty() ? powered : idealSum(C, powered);
            if (C.gens.size() > maxGenerators)
                throw std::runtime_error("coefficientIdeal: generator explosion");
        }
        if (i + 1 < bpp) cur = deltaExtend(cur);
    }
    return {C, fact};
}

R1Result r1Extract(const Ideal& locus, const std::vector<size_t>& activeVars,
                   const std::vector<size_t>& boundaryCoords,
                   const std::set<size_t>& forbiddenForChange) {
    R1Result out;
    if (locus.gens.empty()) return out;
    Polynomial g = multiGcd(locus.gens);
    if (g.isConstant()) return out; // no codimension-one part
    Polynomial s = squarefreePart(g);
    out.divisorPart = s;
    const RingPtr& ring = locus.ring;
    // smoothness of the reduced divisor
    {
        std::vector<Polynomial> jac{s};
        for (size_t v : activeVars) {
            Polynomial d = s.derivative(v);
            if (!d.isZero()) jac.push_back(std::move(d));
        }
        if (!isTrivial(Ideal(ring, jac))) {
            out.kind = R1Result::Kind::NotSmooth;
            return out;
        }
    }
    // normal crossings with the visible boundary
    for (size_t c : boundaryCoords) {
        Polynomial xc = Polynomial::variable(ring, c);
        bool divides = true;
        try {
            exactDivide(s, xc);
        } catch (const std::domain_error&) {
            divides = false;
        }
        if (divides) continue; // the divisor itself is part of the codim-one locus
        std::vector<Polynomial> pair{s, xc};
        for (size_t v : activeVars) {
            if (v == c) continue;
            Polynomial d = s.derivative(v);
            if (!d.isZero()) pair.push_back(std::move(d));
        }
        if (!isTrivial(Ideal(ring, pair))) {
            out.kind = R1Result::Kind::NonCoordinate; // tangential to the boundary
            return out;
        }
    }
    // conversion to a coordinate
    if (s.terms().size() == 1 && s.totalDegree() == 1) {
        auto& m = s.terms().begin()->first;
        for (size_t v = 0; v < m.e.size(); ++v)
            if (m.e[v]) { out.coord = v; break; }
        out.kind = R1Result::Kind::Coordinate;
        return out;
    }
    for (size_t j : activeVars) {
        if (forbiddenForChange.count(j)) continue;
        auto c = pureCoordinateCoeff(s, j);
        if (!c || *c == 0) continue;
        Polynomial h = s - Polynomial::variable(ring, j) * (*c);
        if (h.isZero()) { // scalar multiple of the coordinate
            out.coord = j;
            out.kind = R1Result::Kind::Coordinate;
            return out;
        }
        Polynomial shift = h * (Rational(-1) / *c);
        out.change = triangularChange(ring, j, Rational(1) / *c, shift);
        out.coord = j;
        out.kind = R1Result::Kind::Coordinate;
        return out;
    }
    out.kind = R1Result::Kind::NonCoordinate;
    return out;
}

Engine::Engine(RingPtr ring, Ideal J, unsigned b, const std::vector<size_t>& boundaryCoords,
               ResolveOptions opts)
    : opts_(opts), ring_(std::move(ring)) {
    if (J.gens.empty()) throw std::invalid_argument("cannot resolve the zero ideal");
    if (b < 1) throw std::invalid_argument("threshold b must be >= 1");
    ChartState root;
    root.chart.id = 0;
    root.chart.ring = ring_;
    LevelState L;
    L.J = J;
    L.threshold = b;
    int label = 0;
    for (size_t c : boundaryCoords) {
        ++label;
        root.chart.exceptionals.push_back({label, c, 0});
        L.registry.push_back({label, c, 0});
    }
    labelCounter_ = label;
    root.levels.push_back(std::move(L));
    charts_.push_back(std::move(root));
    recordNode(charts_[0]);
}

unsigned Engine::capFor(unsigned threshold) const {
    unsigned c = 2 * threshold + 8;
    return c > opts_.deltaCap ? c : opts_.deltaCap;
}

void Engine::recordNode(const ChartState& cs) {
    TreeNode n;
    n.id = cs.chart.id;
    n.parent = cs.chart.parentId;
    n.stage = cs.chart.bornStage;
    n.branchIndex = cs.chart.branchIndex;
    if (!cs.chart.trail.empty())
        if (auto* b = std::get_if<BlowupStep>(&cs.chart.trail.back()))
            n.substitution = substitutionText(ring_, b->center, b->chosen);
    n.trail = cs.chart.trail;
    n.exceptionals = cs.chart.exceptionals;
    n.status = cs.status;
    tree_.nodes.push_back(std::move(n));
    syncNode(cs);
}

void Engine::syncNode(const ChartState& cs) {
    for (auto& n : tree_.nodes) {
        if (n.id != cs.chart.id) continue;
        n.status = cs.status;
        n.halt = cs.halt;
        n.trail = cs.chart.trail;
        n.exceptionals = cs.chart.exceptionals;
        if (!cs.levels.empty()) {
            n.currentIdeal = cs.levels[0].J;
            auto [weak, mults] = weakTransformExtract(cs.levels[0].J, ownExcOf(cs.levels[0]));
            n.weakTransform = weak;
            n.divisorMults.clear();
            for (auto& H : cs.chart.exceptionals)
                n.divisorMults.emplace_back(H.label, idealCoordValuation(cs.levels[0].J, H.coord));
        }
        return;
    }
}

std::set<size_t> forbiddenChangeCoords(const ChartState& cs) {
    std::set<size_t> out;
    for (auto& H : cs.chart.exceptionals) out.insert(H.coord);
    for (auto& L : cs.levels)
        for (auto& H : L.registry) out.insert(H.coord);
    for (size_t f : cs.chart.flag) out.insert(f);
    return out;
}

static void applyChangeEverywhere(ChartState& cs, const CoordinateChange& change) {
    for (auto& L : cs.levels) L.J = idealSubstitute(L.J, change.images, L.J.ring);
    cs.chart.trail.push_back(change);
}

ChartDecision Engine::evaluateChart(ChartState& cs) {
    ChartDecision dec;
    FdTrace trace;
    auto& levels = cs.levels;

    for (size_t idx = 0;; ++idx) {
        if (idx >= levels.size()) throw std::logic_error("tower descent ran past the deepest level");
        LevelState& L = levels[idx];
        std::vector<size_t> active = activeVarsFor(cs.chart, idx);

        if (isTrivial(orderLocus(L.J, L.threshold))) {
            if (idx > 0)
                throw std::logic_error("carried level lost its singular locus without a t-drop above");
            trace.terminal = FdTrace::Terminal::Resolved;
            dec.kind = ChartDecision::Kind::Resolved;
            dec.trace = trace;
            cs.trace = trace;
            return dec;
        }

        MaxWOrdResult wres =
            maxWOrd(L.J, L.threshold, ownExcOf(L), flagsAbove(cs.chart, idx), capFor(L.threshold));

        if (wres.weakOrder == 0) {
            // monomial endgame at this level (P2 at the top, Cor 4-9 deeper)
            MonomialObjectData data = monomialDataOf(L);
            if (monomialSingEmpty(data))
                throw std::logic_error("monomial object with empty singular locus reached the dispatcher");
            GammaResult g = gammaMax(data, ring_->dim());
            trace.levels.push_back({Rational(0), -1});
            trace.terminal = FdTrace::Terminal::Gamma;
            trace.gamma = g.value;
            L.lastW = Rational(0);
            L.lastT.reset();
            L.flagCoord = -1;
            levels.resize(idx + 1);
            cs.chart.flag.resize(idx);
            dec.kind = ChartDecision::Kind::MonomialCenter;
            dec.centerCoords = g.centerCoords;
            for (size_t f : flagsAbove(cs.chart, idx)) dec.centerCoords.push_back(f);
            std::sort(dec.centerCoords.begin(), dec.centerCoords.end());
            dec.centerLabels = g.centerLabels;
            dec.centerIdeal = idealFromCoords(ring_, dec.centerCoords);
            dec.centerLevel = static_cast<int>(idx);
            dec.trace = trace;
            cs.trace = trace;
            return dec;
        }

        if (L.lastW) {
            if (wres.w > *L.lastW) throw std::logic_error("max w-ord increased along the sequence");
            if (wres.w < *L.lastW) L.ko = L.localStage;
        }
        TStateResult ts = tState(wres.w, wres.locus, L.registry, L.ko, opts_.maxEMinus);
        if (L.lastT && tLess(*L.lastT, ts.t)) throw std::logic_error("max t increased along the sequence");
        bool keepDeeper = L.lastT && ts.t == *L.lastT && levels.size() > idx + 1;
        L.lastW = wres.w;
        L.lastT = ts.t;
        trace.levels.push_back({wres.w, ts.t.n});

        auto [Jp, bp] = makeJPrime(wres, L.threshold, ring_);
        std::vector<ExceptionalDivisor> eminus, eplus;
        for (auto& H : L.registry) (H.birthStage <= L.ko ? eminus : eplus).push_back(H);
        auto [Jpp, bpp] = makeJDoublePrime(Jp, bp, ts.t.n, eminus, ring_, opts_.maxGenerators);

        bool jpSimple = true, jppSimple = true;
        if (opts_.audit) {
            jpSimple = maxOrder(Jp, capFor(bp)) == bp;
            jppSimple = maxOrder(Jpp, capFor(bpp)) == bpp;
        }

        if (keepDeeper) {
            if (opts_.audit && L.flagCoord >= 0) {
                bool ok = idealContains(orderLocus(Jpp, bpp), Polynomial::variable(ring_, L.flagCoord));
                tree_.audit.giraud.push_back({cs.chart.id, stage_, ok});
            }
            continue; // carried deeper level is still the faithful descent
        }

        levels.resize(idx + 1);
        cs.chart.flag.resize(idx);
        L.flagCoord = -1;

        Ideal maxTLocus = orderLocus(Jpp, bpp);
        std::vector<size_t> boundary;
        for (auto& H : L.registry) boundary.push_back(H.coord);
        R1Result r1 = r1Extract(maxTLocus, active, boundary, forbiddenChangeCoords(cs));

        if (r1.kind == R1Result::Kind::Coordinate) {
            if (r1.change) applyChangeEverywhere(cs, *r1.change);
            trace.terminal = FdTrace::Terminal::Divisor;
            dec.kind = idx == 0 ? ChartDecision::Kind::CaseACenter : ChartDecision::Kind::DescendedCenter;
            dec.centerCoords = {r1.coord};
            for (size_t f : flagsAbove(cs.chart, idx)) dec.centerCoords.push_back(f);
            std::sort(dec.centerCoords.begin(), dec.centerCoords.end());
            dec.centerIdeal = idealFromCoords(ring_, dec.centerCoords);
            dec.centerLevel = static_cast<int>(idx);
            if (opts_.audit)
                tree_.audit.descents.push_back({cs.chart.id, stage_, true, jppSimple, jpSimple});
            dec.trace = trace;
            cs.trace = trace;
            return dec;
        }
        if (r1.kind == R1Result::Kind::NonCoordinate || r1.kind == R1Result::Kind::NotSmooth) {
            trace.terminal = FdTrace::Terminal::Divisor;
            dec.kind = ChartDecision::Kind::Halted;
            dec.halt = HaltReason::NonCoordinateCenter;
            dec.haltDetail = r1.kind == R1Result::Kind::NotSmooth ? "divisorial part not smooth"
                                                                  : "center not coordinate-convertible";
            std::vector<Polynomial> gens;
            for (size_t f : flagsAbove(cs.chart, idx)) gens.push_back(Polynomial::variable(ring_, f));
            gens.push_back(r1.divisorPart);
            dec.centerIdeal = Ideal(ring_, gens);
            dec.centerLevel = static_cast<int>(idx);
            dec.trace = trace;
            cs.trace = trace;
            return dec;
        }

        // Case B: descend one level
        if (active.size() <= 1)
            throw std::logic_error("dimension-one level failed to produce a divisorial center");
        std::set<size_t> eplusCoords;
        for (auto& H : eplus) eplusCoords.insert(H.coord);
        auto mc = findMaximalContact(Jpp, bpp, active, forbiddenChangeCoords(cs), capFor(bpp),
                                     eplusCoords);
        if (!mc) {
            dec.kind = ChartDecision::Kind::Halted;
            dec.halt = HaltReason::NonConvertible;
            dec.haltDetail = "no coordinate-convertible maximal-contact generator";
            dec.trace = trace;
            cs.trace = trace;
            return dec;
        }
        Ideal JppLocal = Jpp;
        if (mc->change) {
            applyChangeEverywhere(cs, *mc->change);
            JppLocal = idealSubstitute(Jpp, mc->change->images, ring_);
        }
        auto [C, cThr] = coefficientIdeal(JppLocal, bpp, mc->coord, opts_.maxGenerators);
        if (C.gens.empty()) throw std::logic_error("coefficient ideal collapsed to zero");

        if (opts_.audit) {
            Polynomial xj = Polynomial::variable(ring_, mc->coord);
            Ideal lhs = orderLocus(JppLocal, bpp);
            lhs = idealSum(lhs, Ideal(ring_, {xj}));
            Ideal rhs = idealSum(orderLocus(C, cThr), Ideal(ring_, {xj}));
            bool singEq = equalLoci(lhs, rhs);
            tree_.audit.descents.push_back({cs.chart.id, stage_, singEq, jppSimple, jpSimple});
        }

        LevelState nl;
        nl.J = C;
        nl.threshold = cThr;
        for (auto& H : eplus) {
            if (H.coord == mc->coord)
                throw std::logic_error("maximal contact collided with an E+ divisor");
            nl.registry.push_back({H.label, H.coord, 0});
        }
        L.flagCoord = static_cast<int>(mc->coord);
        cs.chart.flag.push_back(mc->coord);
        levels.push_back(std::move(nl));
    }
}

void Engine::auditCenter(const ChartState& cs, const ChartDecision& dec) {
    if (!opts_.audit || cs.levels.empty()) return;
    const LevelState& L0 = cs.levels[0];
    if (!L0.lastW || *L0.lastW == 0) return; // P2 stage: t undefined at the top
    RunAudit::CenterCheck chk{cs.chart.id, stage_, true, true};
    MaxWOrdResult wres = maxWOrd(L0.J, L0.threshold, ownExcOf(L0), {}, capFor(L0.threshold));
    for (auto& g : wres.locus.gens)
        if (!radicalMembership(g, dec.centerIdeal)) { chk.insideMaxWOrd = false; break; }
    auto [Jp, bp] = makeJPrime(wres, L0.threshold, ring_);
    std::vector<ExceptionalDivisor> eminus;
    for (auto& H : L0.registry)
        if (H.birthStage <= L0.ko) eminus.push_back(H);
    auto [Jpp, bpp] = makeJDoublePrime(Jp, bp, L0.lastT ? L0.lastT->n : 0, eminus, ring_,
                                       opts_.maxGenerators);
    for (auto& g : orderLocus(Jpp, bpp).gens)
        if (!radicalMembership(g, dec.centerIdeal)) { chk.insideMaxT = false; break; }
    tree_.audit.centers.push_back(chk);
}

void Engine::blowupChart(size_t chartIdx, const ChartDecision& dec, int newLabel) {
    // charts_ may reallocate while children are appended
    const ChartState parent = charts_[chartIdx];
    const std::vector<size_t>& M = dec.centerCoords;
    auto children = blowupCoordinateCenter(parent.chart, M, stage_, newLabel);
    for (auto& childChart : children) {
        childChart.id = static_cast<int>(charts_.size());
        size_t m = M[static_cast<size_t>(childChart.branchIndex)];

        ChartState child;
        child.chart = childChart;
        // levels survive until their supporting flag hyperplane leaves the chart
        size_t keep = parent.levels.size();
        for (size_t idx = 1; idx < parent.levels.size(); ++idx) {
            if (idx - 1 < parent.chart.flag.size() && parent.chart.flag[idx - 1] == m) {
                keep = idx;
                break;
            }
        }
        child.chart.flag.assign(parent.chart.flag.begin(),
                                parent.chart.flag.begin() +
                                    static_cast<long>(keep > 0 ? keep - 1 : 0));
        auto images = blowupImages(ring_, M, m);
        for (size_t idx = 0; idx < keep; ++idx) {
            LevelState L = parent.levels[idx];
            Ideal pulled = idealSubstitute(L.J, images, ring_);
            try {
                L.J = controlledTransform(pulled, L.threshold, m);
                if (opts_.audit) tree_.audit.controlledDivisible.push_back(true);
            } catch (const NotDivisible&) {
                if (opts_.audit) tree_.audit.controlledDivisible.push_back(false);
                throw std::logic_error("algorithm-chosen center violated the divisibility guarantee");
            }
            L.localStage += 1;
            std::vector<ExceptionalDivisor> nr;
            for (auto& H : L.registry)
                if (auto kc = strictTransformHyperplane(H.coord, M, m))
                    nr.push_back({H.label, *kc, H.birthStage});
            nr.push_back({newLabel, m, L.localStage});
            L.registry = std::move(nr);
            if (L.flagCoord >= 0 && static_cast<size_t>(L.flagCoord) == m) L.flagCoord = -1;
            child.levels.push_back(std::move(L));
        }
        charts_.push_back(std::move(child));
        recordNode(charts_.back());
    }
    charts_[chartIdx].status = LeafStatus::Interior;
    syncNode(charts_[chartIdx]);
}

ResolutionTree Engine::run() {
    while (true) {
        std::vector<std::pair<size_t, ChartDecision>> decisions;
        bool resolvedSomething = false;
        for (size_t i = 0; i < charts_.size(); ++i) {
            if (charts_[i].status != LeafStatus::Active) continue;
            ChartDecision dec = evaluateChart(charts_[i]);
            if (dec.kind == ChartDecision::Kind::Resolved) {
                charts_[i].status = LeafStatus::Resolved;
                resolvedSomething = true;
                syncNode(charts_[i]);
            } else {
                decisions.emplace_back(i, dec);
            }
        }
        if (decisions.empty()) break;

        if (stage_ >= opts_.maxStages) {
            StageRecord sr;
            sr.index = stage_;
            sr.halt = HaltReason::StageCap;
            for (auto& [i, dec] : decisions) {
                charts_[i].status = LeafStatus::Halted;
                charts_[i].halt = HaltReason::StageCap;
                syncNode(charts_[i]);
                CenterRecord cr;
                cr.chartId = charts_[i].chart.id;
                cr.ideal = dec.centerIdeal;
                cr.note = "stage cap reached; pending " +
                          std::string(dec.kind == ChartDecision::Kind::Halted ? "halt" : "center");
                sr.centers.push_back(std::move(cr));
                if (sr.fd.levels.empty()) sr.fd = dec.trace;
            }
            tree_.halt = HaltReason::StageCap;
            tree_.stages.push_back(std::move(sr));
            break;
        }

        // global reduction: the maximal trace selects the charts to blow up;
        // a chart whose decision halted participates but only matters once
        // its trace actually attains the maximum
        const FdTrace* best = nullptr;
        for (auto& [i, dec] : decisions)
            if (!best || fdCompare(dec.trace, *best) > 0) best = &dec.trace;
        std::vector<size_t> selected;
        for (size_t k = 0; k < decisions.size(); ++k)
            if (fdCompare(decisions[k].second.trace, *best) == 0) selected.push_back(k);

        bool haltAtMax = false;
        for (size_t k : selected)
            if (decisions[k].second.kind == ChartDecision::Kind::Halted) haltAtMax = true;
        if (haltAtMax) {
            StageRecord sr;
            sr.index = stage_;
            sr.fd = *best;
            if (!best->levels.empty()) {
                sr.maxWOrd = best->levels[0].w;
                if (best->levels[0].n >= 0) sr.maxT = TValue{best->levels[0].w, best->levels[0].n};
            }
            for (size_t k : selected) {
                auto& [i, dec] = decisions[k];
                // the stopping-rule observer still sees the algorithm's center
                if (opts_.onCenter) opts_.onCenter(stage_, charts_[i], dec);
                if (dec.kind == ChartDecision::Kind::Halted) {
                    charts_[i].status = LeafStatus::Halted;
                    charts_[i].halt = dec.halt;
                    tree_.halt = dec.halt;
                    sr.halt = dec.halt;
                    syncNode(charts_[i]);
                }
                CenterRecord cr;
                cr.chartId = charts_[i].chart.id;
                cr.coords = dec.centerCoords;
                cr.ideal = dec.centerIdeal;
                cr.divisorLabels = dec.centerLabels;
                if (dec.kind == ChartDecision::Kind::Halted)
                    cr.note = haltReasonName(dec.halt) +
                              (dec.haltDetail.empty() ? "" : ": " + dec.haltDetail);
                sr.centers.push_back(std::move(cr));
            }
            tree_.stages.push_back(std::move(sr));
            break;
        }

        if (!tree_.stages.empty() && !resolvedSomething) {
            int c = fdCompare(*best, tree_.stages.back().fd);
            if (c >= 0)
                throw std::logic_error("no progress: the global invariant trace failed to decrease");
        }

        StageRecord sr;
        sr.index = stage_;
        sr.fd = *best;
        if (!best->levels.empty()) {
            sr.maxWOrd = best->levels[0].w;
            if (best->levels[0].n >= 0) sr.maxT = TValue{best->levels[0].w, best->levels[0].n};
        }
        if (best->terminal == FdTrace::Terminal::Gamma) sr.gamma = best->gamma;
        for (size_t k : selected) {
            auto& [i, dec] = decisions[k];
            CenterRecord cr;
            cr.chartId = charts_[i].chart.id;
            cr.coords = dec.centerCoords;
            cr.ideal = dec.centerIdeal;
            cr.divisorLabels = dec.centerLabels;
            sr.centers.push_back(std::move(cr));
        }
        tree_.stages.push_back(std::move(sr));

        for (size_t k : selected) auditCenter(charts_[decisions[k].first], decisions[k].second);
        if (opts_.onCenter)
            for (size_t k : selected)
                opts_.onCenter(stage_, charts_[decisions[k].first], decisions[k].second);

        ++stage_;
        // one new exceptional divisor per stage, shared by every selected chart
        int newLabel = ++labelCounter_;
        std::vector<std::pair<size_t, ChartDecision>> toBlow;
        for (size_t k : selected) toBlow.push_back(decisions[k]);
        for (auto& [i, dec] : toBlow) blowupChart(i, dec, newLabel);
    }

    for (auto& cs : charts_) syncNode(cs);
    return tree_;
}

ResolutionTree resolveBasicObject(const RingPtr& ring, const Ideal& J, unsigned b,
                                  const std::vector<size_t>& boundaryCoords,
                                  const ResolveOptions& opts) {
    Engine engine(ring, J, b, boundaryCoords, opts);
    return engine.run();
}

ResolutionTree resolveMonomial(const RingPtr& ring, const std::vector<MonoDivisor>& divisors,
                               unsigned b, const ResolveOptions& opts) {
    // combinatorial endgame: the ideal is implicit in the multiplicities
    struct MonoChart {
        Chart chart;
        std::vector<MonoDivisor> divisors;
        LeafStatus status = LeafStatus::Active;
    };
    ResolutionTree tree;
    std::vector<MonoChart> charts;
    MonoChart root;
    root.chart.id = 0;
    root.chart.ring = ring;
    int label = 0;
    for (auto& d : divisors) {
        ++label;
        root.chart.exceptionals.push_back({d.label, d.coord, 0});
        root.divisors.push_back(d);
    }
    int labelCounter = 0;
    for (auto& d : divisors) labelCounter = std::max(labelCounter, d.label);
    charts.push_back(root);
    {
        TreeNode n;
        n.id = 0;
        n.parent = -1;
        n.exceptionals = root.chart.exceptionals;
        tree.nodes.push_back(n);
    }

    int stage = 0;
    std::optional<GammaValue> prevGamma;
    while (true) {
        struct Cand {
            size_t idx;
            GammaResult g;
        };
        std::vector<Cand> cands;
        for (size_t i = 0; i < charts.size(); ++i) {
            if (charts[i].status != LeafStatus::Active) continue;
            MonomialObjectData data{charts[i].divisors, b};
            if (monomialSingEmpty(data)) {
                charts[i].status = LeafStatus::Resolved;
                for (auto& n : tree.nodes)
                    if (n.id == charts[i].chart.id) n.status = LeafStatus::Resolved;
                continue;
            }
            cands.push_back({i, gammaMax(data, ring->dim())});
        }
        if (cands.empty()) break;
        if (stage >= opts.maxStages) {
            for (auto& c : cands) {
                charts[c.idx].status = LeafStatus::Halted;
                for (auto& n : tree.nodes)
                    if (n.id == charts[c.idx].chart.id) {
                        n.status = LeafStatus::Halted;
                        n.halt = HaltReason::StageCap;
                    }
            }
            tree.halt = HaltReason::StageCap;
            break;
        }
        const GammaValue* best = nullptr;
        for (auto& c : cands)
            if (!best || gammaLess(*best, c.g.value)) best = &c.g.value;
        if (prevGamma && !gammaLess(*best, *prevGamma))
            throw std::logic_error("Gamma failed to decrease strictly in the monomial endgame");
        prevGamma = *best;

        StageRecord sr;
        sr.index = stage;
        sr.gamma = *best;
        FdTrace tr;
        tr.levels.push_back({Rational(0), -1});
        tr.terminal = FdTrace::Terminal::Gamma;
        tr.gamma = *best;
        sr.fd = tr;

        std::vector<Cand> selected;
        for (auto& c : cands)
            if (!gammaLess(c.g.value, *best) && !gammaLess(*best, c.g.value)) selected.push_back(c);
        for (auto& c : selected) {
            CenterRecord cr;
            cr.chartId = charts[c.idx].chart.id;
            cr.coords = c.g.centerCoords;
            std::sort(cr.coords.begin(), cr.coords.end());
            cr.ideal = idealFromCoords(ring, cr.coords);
            cr.divisorLabels = c.g.centerLabels;
            sr.centers.push_back(cr);
        }
        tree.stages.push_back(sr);

        ++stage;
        int newLabel = ++labelCounter;
        for (auto& c : selected) {
            const MonoChart parent = charts[c.idx]; // copy: charts reallocates below
            std::vector<size_t> M = c.g.centerCoords;
            std::sort(M.begin(), M.end());
            uint64_t centerSum = 0;
            for (auto& d : parent.divisors)
                if (std::find(c.g.centerLabels.begin(), c.g.centerLabels.end(), d.label) !=
                    c.g.centerLabels.end())
                    centerSum += d.mult;
            auto children = blowupCoordinateCenter(parent.chart, M, stage, newLabel);
            for (auto& cc : children) {
                cc.id = static_cast<int>(charts.size());
                MonoChart child;
                child.chart = cc;
                size_t m = M[static_cast<size_t>(cc.branchIndex)];
                for (auto& d : parent.divisors)
                    if (d.coord != m) child.divisors.push_back(d);
                uint64_t nm = centerSum - b; // controlled-transform arithmetic
                if (nm >= 1) child.divisors.push_back({newLabel, m, static_cast<uint32_t>(nm)});
                charts.push_back(child);
                TreeNode n;
                n.id = child.chart.id;
                n.parent = parent.chart.id;
                n.stage = stage;
                n.branchIndex = cc.branchIndex;
                if (auto* bstep = std::get_if<BlowupStep>(&child.chart.trail.back()))
                    n.substitution = substitutionText(ring, bstep->center, bstep->chosen);
                n.exceptionals = child.chart.exceptionals;
                for (auto& d : child.divisors) n.divisorMults.emplace_back(d.label, d.mult);
                tree.nodes.push_back(n);
            }
            charts[c.idx].status = LeafStatus::Interior;
            for (auto& n : tree.nodes)
                if (n.id == parent.chart.id) n.status = LeafStatus::Interior;
        }
    }
    return tree;
}

} // namespace desing
