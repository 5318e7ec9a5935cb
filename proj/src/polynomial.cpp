#include "desing/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace desing {

Polynomial::Polynomial(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    if (c != 0) terms_.emplace(Monomial(ring_->dim()), c);
}

Polynomial::Polynomial(RingPtr ring, Monomial m, Rational c) : ring_(std::move(ring)) {
    if (m.e.size() != ring_->dim()) throw std::invalid_argument("monomial/ring dimension mismatch");
    if (c != 0) terms_.emplace(std::move(m), std::move(c));
}

Polynomial Polynomial::variable(const RingPtr& ring, size_t i, uint32_t power) {
    if (i >= ring->dim()) throw std::out_of_range("variable index");
    Monomial m(ring->dim());
    m.e[i] = power;
    return Polynomial(ring, m, 1);
}

uint64_t Polynomial::totalDegree() const {
    uint64_t d = 0;
    for (auto& [m, c] : terms_) d = std::max<uint64_t>(d, m.degree());
    return d;
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!sameRing(ring_, o.ring_)) throw std::invalid_argument("ring mismatch in +");
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.addTerm(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (!sameRing(ring_, o.ring_)) throw std::invalid_argument("ring mismatch in -");
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.addTerm(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!sameRing(ring_, o.ring_)) throw std::invalid_argument("ring mismatch in *");
    Polynomial r(ring_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.addTerm(monoMul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(uint64_t n) const {
    Polynomial acc(ring_, Rational(1));
    if (n == 0) return acc;
    // single-term fast path keeps blowup pullbacks of high powers cheap
    if (terms_.size() == 1) {
        auto& [m, c] = *terms_.begin();
        Monomial mm(ring_->dim());
        for (size_t i = 0; i < mm.e.size(); ++i) mm.e[i] = m.e[i] * static_cast<uint32_t>(n);
        Rational cc = 1;
        for (uint64_t i = 0; i < n; ++i) cc *= c;
        return Polynomial(ring_, mm, cc);
    }
    Polynomial base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::derivative(size_t i) const {
    if (i >= ring_->dim()) throw std::out_of_range("derivative variable index");
    Polynomial r(ring_);
    for (auto& [m, c] : terms_) {
        if (m.e[i] == 0) continue;
        Monomial mm = m;
        mm.e[i] -= 1;
        r.addTerm(mm, c * Rational(m.e[i]));
    }
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, const RingPtr& targetRing) const {
    if (images.size() != ring_->dim()) throw std::invalid_argument("substitution arity mismatch");
    Polynomial r(targetRing);
    for (auto& [m, c] : terms_) {
        Polynomial t(targetRing, c);
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i]) t = t * images[i].pow(m.e[i]);
        r = r + t;
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& p) const {
    if (p.size() != ring_->dim()) throw std::invalid_argument("evaluation arity mismatch");
    Rational r = 0;
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < m.e.size(); ++i)
            for (uint32_t k = 0; k < m.e[i]; ++k) t *= p[i];
        r += t;
    }
    return r;
}

uint32_t Polynomial::coordinateValuation(size_t i) const {
    if (isZero()) throw std::domain_error("coordinateValuation of the zero polynomial");
    uint32_t v = UINT32_MAX;
    for (auto& [m, c] : terms_) v = std::min(v, m.e[i]);
    return v;
}

Polynomial Polynomial::divideByCoordPower(size_t i, uint32_t k) const {
    Polynomial r(ring_);
    for (auto& [m, c] : terms_) {
        if (m.e[i] < k) throw std::domain_error("divideByCoordPower: not divisible");
        Monomial mm = m;
        mm.e[i] -= k;
        r.terms_.emplace(mm, c);
    }
    return r;
}

uint64_t Polynomial::orderAtPoint(const std::vector<Rational>& p) const {
    if (isZero()) throw std::domain_error("orderAtPoint of the zero polynomial");
    // Taylor shift: substitute x_i -> x_i + p_i and scan for the lowest degree.
    std::vector<Polynomial> images;
    images.reserve(ring_->dim());
    for (size_t i = 0; i < ring_->dim(); ++i)
        images.push_back(Polynomial::variable(ring_, i) + Polynomial(ring_, p[i]));
    Polynomial shifted = substitute(images, ring_);
    if (shifted.isZero()) throw std::logic_error("Taylor shift annihilated a nonzero polynomial");
    uint64_t best = UINT64_MAX;
    for (auto& [m, c] : shifted.terms_) best = std::min<uint64_t>(best, m.degree());
    return best;
}

std::optional<std::pair<Monomial, Rational>> Polynomial::leading(TermOrder ord) const {
    if (terms_.empty()) return std::nullopt;
    if (ord == TermOrder::DegRevLex) {
        auto it = terms_.rbegin();
        return std::make_pair(it->first, it->second);
    }
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (monoLess(best->first, it->first, ord)) best = it;
    return std::make_pair(best->first, best->second);
}

Polynomial Polynomial::monic() const {
    if (isZero()) return *this;
    return *this * (Rational(1) / terms_.rbegin()->second);
}

std::string Polynomial::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in descending degrevlex
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = neg ? Rational(-c) : c;
        bool needCoeff = (a != 1) || m.isOne();
        if (needCoeff) os << ratToString(a);
        bool firstVar = true;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (!m.e[i]) continue;
            if (!firstVar || needCoeff) os << "*";
            firstVar = false;
            os << ring_->vars[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

} // namespace desing
