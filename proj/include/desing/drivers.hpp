#pragma once

#include "desing/parse.hpp"
#include "desing/resolver.hpp"

namespace desing {

struct Problem {
    enum class Task { Resolve, Principalize, Embedded, Monomial };
    RingPtr ring;
    Ideal ideal;                      // unused for the monomial task
    unsigned b = 1;
    std::vector<size_t> boundary;     // coordinate indices, distinct
    std::vector<uint32_t> mults;      // parallel to boundary (monomial task)
    Task task = Task::Resolve;
    int maxStages = 128;
    std::string warning;              // set when inputs were coerced (b, boundary)
};

/// Input format: lines "vars:", "ideal:", optional "b:", "boundary:",
/// "mults:", "task:", "maxStages:".
Problem parseProblem(const std::string& text);

ResolutionTree runProblem(const Problem& p, ResolveOptions opts = {});

/// Resolution of (W, (I, 1), {}) plus the per-leaf principality certificate:
/// the total transform splits as exceptional monomial times a unit.
ResolutionTree principalize(Problem p, ResolveOptions opts = {});

/// Principalization watched by the Theorem 7-1 stopping rule: the stage where
/// the strict transform of X joins the selected center is recorded and the
/// smoothness of the strict transform is certified there.
ResolutionTree embeddedResolve(Problem p, ResolveOptions opts = {});

/// Jacobian criterion for V(I): rank of the Jacobian equals the codimension
/// everywhere on the locus.
bool jacobianSmooth(const Ideal& I);

/// I plus the codim-sized minors of its Jacobian matrix.
Ideal singularLocusIdeal(const Ideal& I);

enum class EmitFormat { Text, Json };
std::string emitTree(const ResolutionTree& tree, const RingPtr& ring, EmitFormat fmt,
                     bool withTrace = false);

/// Round-trip support: parse an emitted JSON document and re-emit it from the
/// reconstructed structure. Structural equality with the input is the oracle.
std::string reemitTreeJson(const std::string& jsonText);

/// Built-in golden problems; prints one line per check, returns overall pass.
bool runSeedCorpus(std::ostream& os);

} // namespace desing
