#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace desing {

/// Exponent vector; length always equals the ring dimension.
struct Monomial {
    std::vector<uint32_t> e;

    Monomial() = default;
    explicit Monomial(size_t d) : e(d, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : e(std::move(exps)) {}

    uint64_t degree() const {
        uint64_t s = 0;
        for (auto x : e) s += x;
        return s;
    }
    bool isOne() const {
        for (auto x : e) if (x) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial monoMul(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline bool monoDivides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial monoDiv(const Monomial& b, const Monomial& a) {
    Monomial r(b.e.size());
    for (size_t i = 0; i < b.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

inline Monomial monoLcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
}

enum class TermOrder { DegRevLex, Lex };

/// Strict "a < b" in the given order.
inline bool monoLess(const Monomial& a, const Monomial& b, TermOrder ord) {
    if (ord == TermOrder::Lex) {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
    uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // revlex tie-break: smaller means larger exponent at the last differing position
    for (size_t i = a.e.size(); i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

/// Storage comparator (degrevlex ascending); keeps polynomial term maps canonical.
struct MonoCmp {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monoLess(a, b, TermOrder::DegRevLex);
    }
};

} // namespace desing
