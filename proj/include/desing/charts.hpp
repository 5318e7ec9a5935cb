#pragma once

#include <optional>
#include <set>
#include <variant>

#include "desing/ideal.hpp"

namespace desing {

/// Ring automorphism given by per-variable images together with its inverse.
/// Two kinds arise: affine-linear (variable permutations and the like) and
/// triangular (x_j -> a*x_j + h with h free of x_j).
struct CoordinateChange {
    enum class Kind { AffineLinear, Triangular };
    Kind kind;
    std::vector<Polynomial> images;
    std::vector<Polynomial> inverseImages;
    std::string note;
};

/// Swap two variables.
CoordinateChange swapChange(const RingPtr& ring, size_t i, size_t j);

/// x_target -> scale*x_target + shift, where shift does not involve x_target
/// and scale != 0. The inverse is x_target -> (x_target - shift)/scale.
CoordinateChange triangularChange(const RingPtr& ring, size_t target, const Rational& scale,
                                  const Polynomial& shift);

struct ExceptionalDivisor {
    int label;      // global, monotone across the run
    size_t coord;   // chart variable cutting the divisor
    int birthStage; // stage counter of the owning sequence; 0 = present at start
    bool operator==(const ExceptionalDivisor& o) const = default;
};

struct BlowupStep {
    std::vector<size_t> center; // coordinate indices M
    size_t chosen;              // m: this chart's inverted coordinate
    int stage;
};

using TrailStep = std::variant<BlowupStep, CoordinateChange>;

/// One affine patch of the ambient space. Charts are immutable from the
/// outside; blowups produce fresh children.
struct Chart {
    int id = 0;
    int parentId = -1;
    int branchIndex = -1; // which m of the parent blowup
    int bornStage = 0;
    RingPtr ring;
    std::vector<TrailStep> trail;
    std::vector<ExceptionalDivisor> exceptionals; // ambient-level registry
    std::vector<size_t> flag;                     // maximal-contact coords, outermost first
};

/// Substitution images of the blowup along {x_j = 0 : j in M}, chart m:
/// x_j -> x_m * x_j for j in M \ {m}, identity elsewhere.
std::vector<Polynomial> blowupImages(const RingPtr& ring, const std::vector<size_t>& M, size_t m);

/// Children of a coordinate-subspace blowup, one per element of M, with
/// exceptional registries updated: divisors at the inverted coordinate leave
/// the chart (or are relabeled when |M| = 1, the codimension-one case), the
/// new divisor gets `newLabel` at coordinate m.
std::vector<Chart> blowupCoordinateCenter(const Chart& chart, const std::vector<size_t>& M,
                                          int stage, int newLabel);

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pullback of J divided by x_exc^b, generator by generator. Throws
/// NotDivisible when the chosen center was not inside Sing(J, b).
Ideal controlledTransform(const Ideal& pulledBack, unsigned b, size_t excCoord);

/// Divides J by each exceptional coordinate to its full valuation; returns
/// the weak transform and the extracted multiplicities.
std::pair<Ideal, std::vector<std::pair<int, uint32_t>>> weakTransformExtract(
    const Ideal& J, const std::vector<ExceptionalDivisor>& exc);

/// Rewrites the supplied ideals through the automorphism; the caller appends
/// the change to the owning chart's trail.
std::vector<Ideal> applyChangeToIdeals(const CoordinateChange& change, const std::vector<Ideal>& ideals);

/// Strict transform bookkeeping for a coordinate hyperplane {x_j = 0} under
/// the blowup (M, m): kept index, or nullopt when the hyperplane does not
/// meet the child chart (j == m).
std::optional<size_t> strictTransformHyperplane(size_t j, const std::vector<size_t>& M, size_t m);

} // namespace desing
