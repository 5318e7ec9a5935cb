#include "desing/tree.hpp"

namespace desing {

std::string leafStatusName(LeafStatus s) {
    switch (s) {
        case LeafStatus::Active: return "active";
        case LeafStatus::Interior: return "interior";
        case LeafStatus::Resolved: return "resolved";
        case LeafStatus::Principalized: return "principalized";
        case LeafStatus::StrictTransformSmooth: return "strictTransformSmooth";
        case LeafStatus::Halted: return "halted";
    }
    return "?";
}

std::string haltReasonName(HaltReason r) {
    switch (r) {
        case HaltReason::None: return "none";
        case HaltReason::NonConvertible: return "NonConvertible";
        case HaltReason::NonCoordinateCenter: return "NonCoordinateCenter";
        case HaltReason::StageCap: return "StageCap";
    }
    return "?";
}

bool RunAudit::allOk() const {
    for (auto& d : descents)
        if (!d.singEquality || !d.jppSimple || !d.jpSimple) return false;
    for (auto& g : giraud)
        if (!g.flagStillMaximalContact) return false;
    for (auto& c : centers)
        if (!c.insideMaxT || !c.insideMaxWOrd) return false;
    for (bool b : controlledDivisible)
        if (!b) return false;
    return true;
}

} // namespace desing
