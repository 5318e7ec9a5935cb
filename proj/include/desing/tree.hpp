#pragma once

#include "desing/invariants.hpp"

namespace desing {

enum class LeafStatus { Active, Interior, Resolved, Principalized, StrictTransformSmooth, Halted };

enum class HaltReason { None, NonConvertible, NonCoordinateCenter, StageCap };

std::string leafStatusName(LeafStatus s);
std::string haltReasonName(HaltReason r);

struct TreeNode {
    int id = 0;
    int parent = -1;
    int stage = 0;      // stage at which the chart was created
    int branchIndex = -1;
    std::string substitution; // human-readable images for the creating blowup
    std::vector<TrailStep> trail;
    std::vector<ExceptionalDivisor> exceptionals;
    std::vector<std::pair<int, uint32_t>> divisorMults; // label -> order along divisor
    LeafStatus status = LeafStatus::Active;
    HaltReason halt = HaltReason::None;
    Ideal currentIdeal;      // level-d controlled ideal when the node was last active
    Ideal weakTransform;     // its weak transform
    std::vector<std::pair<int, uint32_t>> principalExponents; // set on principalized leaves
};

struct CenterRecord {
    int chartId = -1;
    std::vector<size_t> coords;  // empty for non-coordinate (halt) reports
    Ideal ideal;
    std::vector<int> divisorLabels; // monomial centers: the chosen divisor labels
    std::string note;               // halt diagnostics
};

struct StageRecord {
    int index = 0;
    Rational maxWOrd;
    std::optional<TValue> maxT;
    std::optional<GammaValue> gamma;
    FdTrace fd;                 // trace of the selecting chart
    std::vector<CenterRecord> centers;
    HaltReason halt = HaltReason::None;
};

/// Audit trail of internal consistency checks, kept for the property suites.
struct RunAudit {
    struct Descent {
        int chartId, stage;
        bool singEquality;       // Sing(J'', b'') meets hyperplane = Sing(C, b''!)
        bool jppSimple;          // maxOrder(J'') == b''
        bool jpSimple;           // maxOrder(J') == b'
    };
    struct Giraud {
        int chartId, stage;
        bool flagStillMaximalContact;
    };
    struct CenterCheck {
        int chartId, stage;
        bool insideMaxT;         // center locus inside the max-t component it came from
        bool insideMaxWOrd;
    };
    std::vector<Descent> descents;
    std::vector<Giraud> giraud;
    std::vector<CenterCheck> centers;
    std::vector<bool> controlledDivisible; // one entry per executed controlled transform
    bool allOk() const;
};

struct ResolutionTree {
    std::vector<TreeNode> nodes;
    std::vector<StageRecord> stages;
    RunAudit audit;
    HaltReason halt = HaltReason::None;
    int embeddedStopStage = -1; // embedded driver: stage where the strict transform was swallowed
    std::vector<int> embeddedStopCharts;

    const TreeNode* node(int id) const {
        for (auto& n : nodes)
            if (n.id == id) return &n;
        return nullptr;
    }
};

} // namespace desing
