#pragma once

#include <memory>
#include <vector>

#include "desing/polynomial.hpp"

namespace desing {

/// Finitely generated ideal. Zero polynomials are never stored; the unit
/// ideal is representable by a constant generator. An attached Groebner
/// basis, when present, is set once at construction and never mutated.
struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::shared_ptr<const std::vector<Polynomial>> cachedGroebner; // degrevlex, reduced

    Ideal() = default;
    explicit Ideal(RingPtr r) : ring(std::move(r)) {}
    Ideal(RingPtr r, std::vector<Polynomial> g);

    bool isZeroIdeal() const { return gens.empty(); }
};

/// Drops zeros and duplicates (up to scalar), and generators that are
/// monomial multiples of a single-term generator. The generated ideal is
/// unchanged; generator lists stay small along delta chains.
std::vector<Polynomial> pruneGenerators(std::vector<Polynomial> gens);

Ideal makeIdeal(const RingPtr& ring, std::vector<Polynomial> gens);

enum class IdealOp { Sum, Product, Power };

/// Generator-level sum/product/power; no basis computation implied.
Ideal idealSum(const Ideal& a, const Ideal& b);
Ideal idealProduct(const Ideal& a, const Ideal& b);
Ideal idealPower(const Ideal& a, unsigned n); // n >= 1

/// Min over generators of the coordinate valuation; unit-containing ideals
/// report 0 there too. Errors on the zero ideal.
uint32_t idealCoordValuation(const Ideal& I, size_t var);

/// Divide every generator by x_var^k (each must be divisible).
Ideal idealDivideByCoordPower(const Ideal& I, size_t var, uint32_t k);

/// Order nu_p(I) = min over generators of the Taylor order at p.
uint64_t orderAtRationalPoint(const Ideal& I, const std::vector<Rational>& p);

/// Substitute through all generators.
Ideal idealSubstitute(const Ideal& I, const std::vector<Polynomial>& images, const RingPtr& target);

std::string idealToString(const Ideal& I);

} // namespace desing
