#pragma once

#include "desing/ideal.hpp"

namespace desing {

/// Buchberger-complete reduced basis for the given order. The result is
/// deterministic: monic generators, fully interreduced, sorted by leading
/// monomial. The zero ideal yields an empty basis.
std::vector<Polynomial> groebner(const Ideal& I, TermOrder ord = TermOrder::DegRevLex);

/// Same ideal with cachedGroebner attached.
Ideal groebnerBasis(const Ideal& I, TermOrder ord = TermOrder::DegRevLex);

/// Remainder of f on division by the basis (top reduction until no leading
/// term of the basis divides any term of the remainder).
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis, TermOrder ord);

/// 1 in I ?
bool isTrivial(const Ideal& I);

/// f in I via normal form against a degrevlex basis.
bool idealContains(const Ideal& I, const Polynomial& f);
bool idealContains(const std::vector<Polynomial>& basis, const Polynomial& f, TermOrder ord);

/// Mutual membership.
bool idealEqual(const Ideal& A, const Ideal& B);

/// f vanishes on V(I)? Rabinowitsch: 1 in I + <1 - t*f> in the extended ring.
bool radicalMembership(const Polynomial& f, const Ideal& I);

/// Krull dimension of V(I); the trivial ideal reports -1. Computed from the
/// leading-term ideal by maximal independent variable sets.
int krullDimension(const Ideal& I);

} // namespace desing
