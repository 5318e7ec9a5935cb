#pragma once

#include <functional>
#include <set>

#include "desing/tree.hpp"

namespace desing {

struct ChartState;
struct ChartDecision;

struct ResolveOptions {
    int maxStages = 128;
    unsigned deltaCap = 64;      // floor for the delta-chain safety cap
    int maxEMinus = 8;           // subset-enumeration cap for the t-invariant
    size_t maxGenerators = 20000;
    bool audit = true;
    // observer invoked for every selected chart right before its blowup
    std::function<void(int stage, const ChartState&, const ChartDecision&)> onCenter;
};

/// One auxiliary basic object of the per-chart tower. Level 0 sits at the
/// ambient dimension; each deeper level lives on the vanishing of the flag
/// coordinates above it. Generators of J never involve those coordinates.
struct LevelState {
    Ideal J;
    unsigned threshold = 1;
    std::vector<ExceptionalDivisor> registry; // birthStage 0 = initial boundary of this level
    int localStage = 0;                       // transformations applied to this level
    int ko = 0;                               // local stage of the last max-w-ord drop
    std::optional<Rational> lastW;
    std::optional<TValue> lastT;
    int flagCoord = -1;                       // hyperplane that produced the next level
};

struct ChartState {
    Chart chart;
    std::vector<LevelState> levels;
    LeafStatus status = LeafStatus::Active;
    HaltReason halt = HaltReason::None;
    FdTrace trace;
};

/// Lemma-level building blocks, exposed for direct testing.

/// The simple object tracking Max w-ord: (J-bar, b*maxw) when b*maxw >= b,
/// else (J-bar^{b-bk} + excMonomial^{bk}, bk(b-bk)).
std::pair<Ideal, unsigned> makeJPrime(const MaxWOrdResult& wdata, unsigned b,
                                      const RingPtr& ring);

/// J'' = J' + prod over n-subsets of E^- of (sum of I(H_s))^{b'}; the
/// boundary handed to the descent is E^+.
std::pair<Ideal, unsigned> makeJDoublePrime(const Ideal& Jp, unsigned bp, int n,
                                            const std::vector<ExceptionalDivisor>& eminus,
                                            const RingPtr& ring, size_t maxGenerators);

struct MaximalContact {
    size_t coord;
    std::optional<CoordinateChange> change;
};

/// Scans generators of Delta^{bpp-1}(Jpp) for c*x_j (+ h free of x_j);
/// pure coordinates first, then triangular conversions on coordinates not in
/// `forbiddenForChange`. Coordinates of the E^+ boundary handed down by the
/// descent are excluded: the hypersurface must not sit inside that boundary.
/// Ties: smallest variable index, then generator order.
std::optional<MaximalContact> findMaximalContact(const Ideal& Jpp, unsigned bpp,
                                                 const std::vector<size_t>& activeVars,
                                                 const std::set<size_t>& forbiddenForChange,
                                                 unsigned deltaCap,
                                                 const std::set<size_t>& excludedCoords = {});

/// C(J'') = sum_{i<b''} Delta^i(J'')^{b''!/(b''-i)} restricted to {x_j = 0};
/// returns the ideal together with its threshold b''!.
std::pair<Ideal, unsigned> coefficientIdeal(const Ideal& Jpp, unsigned bpp, size_t hyperplane,
                                            size_t maxGenerators);

struct R1Result {
    enum class Kind { None, Coordinate, NonCoordinate, NotSmooth };
    Kind kind = Kind::None;
    size_t coord = 0;                        // for Kind::Coordinate
    Polynomial divisorPart;                  // squarefree divisorial part
    std::optional<CoordinateChange> change;  // conversion applied, if any
};

/// Divisorial part of a locus: gcd of the generators, squarefree, checked
/// smooth and normal-crossing with the visible boundary, then converted to a
/// coordinate when possible.
R1Result r1Extract(const Ideal& locus, const std::vector<size_t>& activeVars,
                   const std::vector<size_t>& boundaryCoords,
                   const std::set<size_t>& forbiddenForChange);

/// What one chart wants to do this stage.
struct ChartDecision {
    enum class Kind { Resolved, MonomialCenter, CaseACenter, DescendedCenter, Halted };
    Kind kind = Kind::Resolved;
    FdTrace trace;
    std::vector<size_t> centerCoords; // full ambient coordinate set, sorted
    Ideal centerIdeal;
    std::vector<int> centerLabels;    // for monomial centers
    int centerLevel = -1;             // tower index the center came from
    HaltReason halt = HaltReason::None;
    std::string haltDetail;
};

class Engine {
public:
    Engine(RingPtr ring, Ideal J, unsigned b, const std::vector<size_t>& boundaryCoords,
           ResolveOptions opts);

    /// Full staged loop; returns the tree with audits attached.
    ResolutionTree run();

    /// Single-chart evaluation (mutates the state: coordinate changes and
    /// tower growth). Exposed for tests.
    ChartDecision evaluateChart(ChartState& cs);

    const std::vector<ChartState>& charts() const { return charts_; }

private:
    ResolveOptions opts_;
    RingPtr ring_;
    int labelCounter_ = 0;
    int stage_ = 0;
    std::vector<ChartState> charts_;
    ResolutionTree tree_;

    unsigned capFor(unsigned threshold) const;
    void blowupChart(size_t chartIdx, const ChartDecision& dec, int newLabel);
    void recordNode(const ChartState& cs);
    void syncNode(const ChartState& cs);
    void auditCenter(const ChartState& cs, const ChartDecision& dec);
};

/// Resolution of the basic object (W, (J, b), E).
ResolutionTree resolveBasicObject(const RingPtr& ring, const Ideal& J, unsigned b,
                                  const std::vector<size_t>& boundaryCoords,
                                  const ResolveOptions& opts = {});

/// Combinatorial resolution of a monomial basic object given by boundary
/// divisors with multiplicities.
ResolutionTree resolveMonomial(const RingPtr& ring, const std::vector<MonoDivisor>& divisors,
                               unsigned b, const ResolveOptions& opts = {});

} // namespace desing
