#include <doctest.h>

#include <json.hpp>

#include "desing/drivers.hpp"

using namespace desing;

namespace {
Ideal I(const RingPtr& r, const std::string& gens) { return Ideal(r, parsePolynomialList(gens, r)); }
} // namespace

TEST_CASE("problem parsing") {
    Problem cusp = parseProblem("vars: x y\nideal: x^2 - y^3\nb: 2\ntask: resolve");
    CHECK(cusp.ring->vars == std::vector<std::string>{"x", "y"});
    CHECK(cusp.b == 2);
    CHECK(cusp.task == Problem::Task::Resolve);
    CHECK(idealEqual(cusp.ideal, I(cusp.ring, "x^2 - y^3")));

    Problem ex = parseProblem("vars: x1 x2 x3\nideal: x1, x2*x3\ntask: principalize");
    CHECK(ex.task == Problem::Task::Principalize);
    CHECK(ex.ideal.gens.size() == 2);

    CHECK_THROWS_AS(parseProblem("vars: x y\nideal: x^\ntask: resolve"), ParseError);
    CHECK_THROWS_AS(parseProblem("vars: x y\nideal: q + 1\ntask: resolve"), ParseError);
    CHECK_THROWS_AS(parseProblem("vars: x y\nideal: 0\ntask: resolve"), ParseError);
    CHECK_THROWS_AS(parseProblem("vars: x y\ntask: monomial\nboundary: x\n"), ParseError);

    Problem mono = parseProblem("vars: x y\nboundary: x y\nmults: x=3, y=3\nb: 2\ntask: monomial");
    CHECK(mono.mults == std::vector<uint32_t>{3, 3});
}

TEST_CASE("principalization certificates") {
    Problem p = parseProblem("vars: x1 x2 x3\nideal: x1, x2*x3\ntask: principalize");
    ResolutionTree tree = principalize(p);
    CHECK(tree.halt == HaltReason::None);
    int leaves = 0;
    for (auto& n : tree.nodes) {
        bool leaf = true;
        for (auto& m : tree.nodes)
            if (m.parent == n.id) leaf = false;
        if (!leaf) continue;
        ++leaves;
        CHECK(n.status == LeafStatus::Principalized);
        CHECK(!n.principalExponents.empty());
    }
    CHECK(leaves >= 2);

    // <x> on the line: principal after at most one step
    Problem line = parseProblem("vars: x\nideal: x\ntask: principalize");
    ResolutionTree lt = principalize(line);
    CHECK(lt.halt == HaltReason::None);
    CHECK(lt.stages.size() <= 1);
}

TEST_CASE("embedded resolution stops when the strict transform is swallowed") {
    SUBCASE("smooth hypersurface stops immediately") {
        Problem p = parseProblem("vars: x y\nideal: x\ntask: embedded");
        ResolutionTree t = embeddedResolve(p);
        CHECK(t.embeddedStopStage == 0);
        REQUIRE(!t.stages.empty());
        CHECK(idealEqual(t.stages[0].centers[0].ideal, I(p.ring, "x")));
        bool marked = false;
        for (auto& n : t.nodes)
            if (n.status == LeafStatus::StrictTransformSmooth) marked = true;
        CHECK(marked);
    }

    SUBCASE("cusp: strict transform becomes smooth and is then swallowed") {
        Problem p = parseProblem("vars: x y\nideal: x^2 - y^3\ntask: embedded\nmaxStages: 40");
        ResolutionTree t = embeddedResolve(p);
        CHECK(t.embeddedStopStage >= 1);
        CHECK(!t.embeddedStopCharts.empty());
        bool marked = false;
        for (auto& n : t.nodes)
            if (n.status == LeafStatus::StrictTransformSmooth) marked = true;
        CHECK(marked);
        // stage-0 center is the origin, over Sing(X)
        CHECK(idealEqual(t.stages[0].centers[0].ideal, I(p.ring, "x, y")));
        Ideal sing = singularLocusIdeal(p.ideal);
        for (auto& g : sing.gens) CHECK(radicalMembership(g, t.stages[0].centers[0].ideal));
    }

    SUBCASE("quadric pair halts with the reported non-coordinate center") {
        Problem p = parseProblem(
            "vars: x y z w\nideal: x^2 + y^2 + z^2 + w^2, x^6 + y^6 + z^6 + w^6\ntask: embedded");
        ResolutionTree t = embeddedResolve(p);
        CHECK(t.halt == HaltReason::NonCoordinateCenter);
        CHECK(t.embeddedStopStage == -1); // halted before the swallow could happen
    }
}

TEST_CASE("jacobian smoothness") {
    auto r = makeRing({"x", "y", "z"});
    CHECK(jacobianSmooth(I(r, "x")));
    CHECK(jacobianSmooth(I(r, "x, y")));
    CHECK(!jacobianSmooth(I(r, "x^2 - y^2*z")));
    CHECK(jacobianSmooth(I(r, "x^2 - y^2*z - 1, z"))); // smooth conic cylinder slice
}

TEST_CASE("tree emission") {
    Problem p = parseProblem("vars: x y\nideal: x^2 - y^3\nb: 2\ntask: resolve");
    ResolutionTree t = runProblem(p);

    SUBCASE("text output is deterministic and mentions the center") {
        std::string a = emitTree(t, p.ring, EmitFormat::Text);
        ResolutionTree t2 = runProblem(p);
        std::string b = emitTree(t2, p.ring, EmitFormat::Text);
        CHECK(a == b);
        CHECK(a.find("<x, y>") != std::string::npos);
    }

    SUBCASE("json round-trip is structurally stable") {
        std::string j = emitTree(t, p.ring, EmitFormat::Json);
        std::string j2 = reemitTreeJson(j);
        CHECK(nlohmann::json::parse(j) == nlohmann::json::parse(j2));
    }

    SUBCASE("already-resolved input yields a single resolved root") {
        Problem triv = parseProblem("vars: x y\nideal: x\nb: 2\ntask: resolve");
        ResolutionTree tt = runProblem(triv);
        CHECK(tt.stages.empty());
        REQUIRE(tt.nodes.size() == 1);
        CHECK(tt.nodes[0].status == LeafStatus::Resolved);
    }

    SUBCASE("monomial run text shows the Gamma line") {
        Problem mono =
            parseProblem("vars: x y\nboundary: x y\nmults: x=3, y=3\nb: 2\ntask: monomial");
        ResolutionTree mt = runProblem(mono);
        std::string s = emitTree(mt, mono.ring, EmitFormat::Text);
        CHECK(s.find("Gamma max = (-1, 3/2, (2,0))") != std::string::npos);
    }
}

TEST_CASE("byte-identical emissions across runs") {
    Problem p = parseProblem("vars: x1 x2 x3\nideal: x1, x2*x3\ntask: principalize");
    std::string a = emitTree(runProblem(p), p.ring, EmitFormat::Json);
    std::string b = emitTree(runProblem(p), p.ring, EmitFormat::Json);
    CHECK(a == b);
}

TEST_CASE("tree structure invariants") {
    Problem p = parseProblem("vars: x1 x2 x3\nideal: x1, x2*x3\ntask: principalize");
    ResolutionTree t = runProblem(p);
    for (auto& n : t.nodes) {
        if (n.parent < 0) {
            CHECK(n.stage == 0);
            continue;
        }
        const TreeNode* par = t.node(n.parent);
        REQUIRE(par != nullptr);
        CHECK(par->stage < n.stage); // stages strictly increase along paths
    }
    // ids are unique
    std::set<int> ids;
    for (auto& n : t.nodes) CHECK(ids.insert(n.id).second);
}

TEST_CASE("problem parsing rejects duplicate boundary names") {
    CHECK_THROWS_AS(parseProblem("vars: x y\nideal: x\nboundary: x x\ntask: resolve"), ParseError);
}
