#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace desing {

/// An affine polynomial ring over the rationals, identified by its ordered
/// variable names. Rings are immutable and shared by pointer.
struct Ring {
    std::vector<std::string> vars;

    explicit Ring(std::vector<std::string> names) : vars(std::move(names)) {
        for (size_t i = 0; i < vars.size(); ++i)
            for (size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name: " + vars[i]);
    }

    size_t dim() const { return vars.size(); }

    int indexOf(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr makeRing(std::vector<std::string> names) {
    return std::make_shared<const Ring>(std::move(names));
}

/// Same variables plus one fresh one at the end (Rabinowitsch trick).
inline RingPtr extendRing(const RingPtr& r, const std::string& fresh) {
    auto names = r->vars;
    names.push_back(fresh);
    return makeRing(std::move(names));
}

inline bool sameRing(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->vars == b->vars;
}

} // namespace desing
