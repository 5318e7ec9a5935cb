#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "desing/monomial.hpp"
#include "desing/rational.hpp"
#include "desing/ring.hpp"

namespace desing {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in a canonical (degrevlex-ascending) map; no zero
/// coefficients are ever stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const Rational& c);                 // constant
    Polynomial(RingPtr ring, Monomial m, Rational c);            // single term

    static Polynomial variable(const RingPtr& ring, size_t i, uint32_t power = 1);

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rational, MonoCmp>& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isOne()); }
    uint64_t totalDegree() const;                                 // 0 for the zero polynomial

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(uint64_t n) const;

    /// Formal partial derivative with respect to variable i.
    Polynomial derivative(size_t i) const;

    /// Evaluate the substitution x_i -> images[i]; images live in targetRing.
    Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr& targetRing) const;

    /// Evaluate at a rational point.
    Rational evaluate(const std::vector<Rational>& p) const;

    /// Largest m with x_i^m dividing the polynomial. Errors on zero input.
    uint32_t coordinateValuation(size_t i) const;

    /// Exact division by x_i^k; caller guarantees divisibility.
    Polynomial divideByCoordPower(size_t i, uint32_t k) const;

    /// Lowest total degree appearing after the Taylor shift x -> x + p,
    /// i.e. the order of this polynomial at the point p.
    uint64_t orderAtPoint(const std::vector<Rational>& p) const;

    /// Leading monomial/coefficient in the given term order; zero poly -> nullopt.
    std::optional<std::pair<Monomial, Rational>> leading(TermOrder ord) const;

    /// Scaled so the degrevlex-leading coefficient is 1.
    Polynomial monic() const;

    void addTerm(const Monomial& m, const Rational& c);           // accumulates, drops zeros

    std::string toString() const;

private:
    RingPtr ring_;
    std::map<Monomial, Rational, MonoCmp> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace desing
