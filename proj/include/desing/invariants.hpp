#pragma once

#include "desing/charts.hpp"
#include "desing/delta.hpp"

namespace desing {

/// (w-ord, n), ordered lexicographically.
struct TValue {
    Rational wOrd;
    int n = 0;
    bool operator==(const TValue& o) const { return wOrd == o.wOrd && n == o.n; }
};
inline bool tLess(const TValue& a, const TValue& b) {
    if (a.wOrd != b.wOrd) return a.wOrd < b.wOrd;
    return a.n < b.n;
}

/// (-codim, weighted multiplicity sum / b, descending label tuple).
struct GammaValue {
    int g1 = 0;
    Rational g2;
    std::vector<int> g3; // descending, zero-padded to the ambient dimension
    bool operator==(const GammaValue& o) const = default;
};
inline bool gammaLess(const GammaValue& a, const GammaValue& b) {
    if (a.g1 != b.g1) return a.g1 < b.g1;
    if (a.g2 != b.g2) return a.g2 < b.g2;
    return std::lexicographical_compare(a.g3.begin(), a.g3.end(), b.g3.begin(), b.g3.end());
}
std::string gammaToString(const GammaValue& g);

struct MonoDivisor {
    int label;
    size_t coord;
    uint32_t mult; // >= 1
};

/// A basic object whose ideal is the product of the registered divisor
/// ideals to their multiplicities.
struct MonomialObjectData {
    std::vector<MonoDivisor> divisors;
    unsigned b = 1;
};

/// Weak-transform order data for one tower level.
struct MaxWOrdResult {
    Rational w;                                   // maxOrder(weak)/b
    unsigned weakOrder = 0;                       // maxOrder(weak)
    Ideal weak;                                   // J-bar
    std::vector<std::pair<int, uint32_t>> mults;  // per own exceptional divisor
    Polynomial excMonomial;                       // product of the extracted divisor powers
    Ideal locus;                                  // Delta^{c-1}(weak) + flag equations; unit when w = 0
};

/// w-ord of the state: extract own-sequence exceptional multiplicities, then
/// measure the weak transform. `ownExc` must list only divisors born during
/// this level's sequence (initial boundary is never extracted).
MaxWOrdResult maxWOrd(const Ideal& J, unsigned b, const std::vector<ExceptionalDivisor>& ownExc,
                      const std::vector<size_t>& flagCoords, unsigned deltaCap);

struct TStateResult {
    TValue t;
    std::vector<Ideal> components;  // locus + sum of the achieving divisor ideals
    std::vector<std::vector<int>> componentLabels;
    std::vector<int> eMinusLabels;
};

/// History-dependent t-invariant: E^- is the set of registered divisors with
/// birthStage <= ko (initial boundary included); n is the largest m such
/// that the max-w-ord locus meets an intersection of m distinct E^- divisors.
TStateResult tState(const Rational& w, const Ideal& locusIdeal,
                    const std::vector<ExceptionalDivisor>& registry, int ko,
                    int maxEMinus = 8);

struct GammaResult {
    GammaValue value;
    std::vector<size_t> centerCoords;
    std::vector<int> centerLabels;
};

/// True iff no divisor subset reaches the threshold (Sing empty).
bool monomialSingEmpty(const MonomialObjectData& data);

/// The canonical monomial center: maximal Gamma over divisor subsets.
GammaResult gammaMax(const MonomialObjectData& data, size_t ambientDim);

/// The per-level record of one resolve-step evaluation, compared
/// lexicographically level by level; a divisor terminal dominates any
/// deeper descent at equal prefixes.
struct FdTrace {
    struct Entry {
        Rational w;
        int n = 0;
    };
    enum class Terminal { Divisor, Gamma, Resolved };
    std::vector<Entry> levels;
    Terminal terminal = Terminal::Resolved;
    std::optional<GammaValue> gamma;
};

int fdCompare(const FdTrace& a, const FdTrace& b); // -1, 0, 1
std::string fdToString(const FdTrace& t);

} // namespace desing
