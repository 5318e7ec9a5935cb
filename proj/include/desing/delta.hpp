#pragma once

#include "desing/groebner.hpp"

namespace desing {

/// Iterated extensions [Delta^0(J), Delta^1(J), ...], truncated at the first
/// unit ideal (inclusive) or at the cap.
struct DeltaChain {
    Ideal base;
    std::vector<Ideal> powers;
};

/// Ideal generated by the generators and all their first partials, over the
/// coordinates the ideal may use. `activeOnly`, when nonempty, restricts the
/// differentiation variables (frozen flag coordinates contribute nothing).
Ideal deltaExtend(const Ideal& I, const std::vector<size_t>& activeVars = {});

DeltaChain deltaChain(const Ideal& I, unsigned cap, const std::vector<size_t>& activeVars = {});

/// Largest b with Delta^{b-1}(I) non-trivial; 0 for the trivial ideal.
/// Errors on the zero ideal (order unbounded) and past the cap.
unsigned maxOrder(const Ideal& I, unsigned cap = 64, const std::vector<size_t>& activeVars = {});

/// Delta^{b-1}(I): the ideal whose zero set is {nu_p >= b}.
Ideal orderLocus(const Ideal& I, unsigned b, const std::vector<size_t>& activeVars = {});

/// V(A) == V(B) via mutual radical membership of generators.
bool equalLoci(const Ideal& A, const Ideal& B);

} // namespace desing
