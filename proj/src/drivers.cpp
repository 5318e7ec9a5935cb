#include "desing/drivers.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace desing {

namespace {

using nlohmann::json;

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> splitWs(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

std::vector<ExceptionalDivisor> ownExceptionals(const LevelState& L) {
    std::vector<ExceptionalDivisor> out;
    for (auto& H : L.registry)
        if (H.birthStage >= 1) out.push_back(H);
    return out;
}

Ideal totalTransform(const Ideal& J0, const TreeNode& leaf, const RingPtr& ring) {
    std::vector<Polynomial> gens = J0.gens;
    for (auto& step : leaf.trail) {
        std::vector<Polynomial> images;
        if (auto* b = std::get_if<BlowupStep>(&step))
            images = blowupImages(ring, b->center, b->chosen);
        else
            images = std::get<CoordinateChange>(step).images;
        for (auto& g : gens) g = g.substitute(images, ring);
    }
    return Ideal(ring, std::move(gens));
}

Polynomial detPoly(const std::vector<std::vector<Polynomial>>& M, const RingPtr& ring) {
    size_t n = M.size();
    if (n == 1) return M[0][0];
    Polynomial acc(ring);
    for (size_t k = 0; k < n; ++k) {
        std::vector<std::vector<Polynomial>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(M[i][j]);
            minor.push_back(std::move(row));
        }
        Polynomial term = M[0][k] * detPoly(minor, ring);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

void appendMinors(const Ideal& I, int r, std::vector<Polynomial>& out) {
    const RingPtr& ring = I.ring;
    size_t rows = I.gens.size(), cols = ring->dim();
    if (r <= 0 || static_cast<size_t>(r) > rows || static_cast<size_t>(r) > cols) return;
    std::vector<std::vector<Polynomial>> jac(rows, std::vector<Polynomial>(cols, Polynomial(ring)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) jac[i][j] = I.gens[i].derivative(j);
    std::vector<size_t> ri(r), ci(r);
    std::function<void(size_t, size_t)> pickCols = [&](size_t start, size_t k) {
        if (k == static_cast<size_t>(r)) {
            std::vector<std::vector<Polynomial>> M(r, std::vector<Polynomial>(r, Polynomial(ring)));
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) M[a][b] = jac[ri[a]][ci[b]];
            Polynomial d = detPoly(M, ring);
            if (!d.isZero()) out.push_back(std::move(d));
            return;
        }
        for (size_t j = start; j < cols; ++j) {
            ci[k] = j;
            pickCols(j + 1, k + 1);
        }
    };
    std::function<void(size_t, size_t)> pickRows = [&](size_t start, size_t k) {
        if (k == static_cast<size_t>(r)) {
            pickCols(0, 0);
            return;
        }
        for (size_t i = start; i < rows; ++i) {
            ri[k] = i;
            pickRows(i + 1, k + 1);
        }
    };
    pickRows(0, 0);
}

} // namespace

Ideal singularLocusIdeal(const Ideal& I) {
    int dim = krullDimension(I);
    int r = static_cast<int>(I.ring->dim()) - dim;
    std::vector<Polynomial> gens = I.gens;
    appendMinors(I, r, gens);
    return Ideal(I.ring, std::move(gens));
}

bool jacobianSmooth(const Ideal& I) {
    if (I.gens.empty()) return true;
    if (isTrivial(I)) return true; // empty locus
    return isTrivial(singularLocusIdeal(I));
}

Problem parseProblem(const std::string& text) {
    Problem p;
    std::istringstream is(text);
    std::string line;
    int lineNo = 0;
    std::string idealText, multsText, boundaryText;
    int idealLine = 1;
    while (std::getline(is, line)) {
        ++lineNo;
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        size_t colon = t.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineNo, 1);
        std::string key = trimmed(t.substr(0, colon));
        std::string val = trimmed(t.substr(colon + 1));
        if (key == "vars") {
            p.ring = makeRing(splitWs(val));
        } else if (key == "ideal") {
            idealText = val;
            idealLine = lineNo;
        } else if (key == "b") {
            p.b = static_cast<unsigned>(std::stoul(val));
        } else if (key == "boundary") {
            boundaryText = val;
        } else if (key == "mults") {
            multsText = val;
        } else if (key == "task") {
            if (val == "resolve") p.task = Problem::Task::Resolve;
            else if (val == "principalize") p.task = Problem::Task::Principalize;
            else if (val == "embedded") p.task = Problem::Task::Embedded;
            else if (val == "monomial") p.task = Problem::Task::Monomial;
            else throw ParseError("unknown task '" + val + "'", lineNo, 1);
        } else if (key == "maxStages") {
            p.maxStages = std::stoi(val);
        } else {
            throw ParseError("unknown key '" + key + "'", lineNo, 1);
        }
    }
    if (!p.ring) throw ParseError("missing 'vars:' line", lineNo, 1);
    if (!boundaryText.empty()) {
        for (auto& name : splitWs(boundaryText)) {
            int idx = p.ring->indexOf(name);
            if (idx < 0) throw ParseError("unknown boundary variable '" + name + "'", 1, 1);
            p.boundary.push_back(static_cast<size_t>(idx));
        }
        std::set<size_t> uniq(p.boundary.begin(), p.boundary.end());
        if (uniq.size() != p.boundary.size()) throw ParseError("duplicate boundary variable", 1, 1);
    }
    if (p.task == Problem::Task::Monomial) {
        if (multsText.empty()) throw ParseError("monomial task needs 'mults:'", 1, 1);
        std::map<std::string, uint32_t> byName;
        std::istringstream ms(multsText);
        std::string piece;
        while (std::getline(ms, piece, ',')) {
            std::string q = trimmed(piece);
            size_t eq = q.find('=');
            if (eq == std::string::npos) throw ParseError("mults entries look like name=nat", 1, 1);
            byName[trimmed(q.substr(0, eq))] =
                static_cast<uint32_t>(std::stoul(trimmed(q.substr(eq + 1))));
        }
        for (size_t c : p.boundary) {
            auto it = byName.find(p.ring->vars[c]);
            if (it == byName.end())
                throw ParseError("missing multiplicity for boundary '" + p.ring->vars[c] + "'", 1, 1);
            p.mults.push_back(it->second);
        }
    } else {
        if (idealText.empty()) throw ParseError("missing 'ideal:' line", idealLine, 1);
        auto gens = parsePolynomialList(idealText, p.ring, idealLine);
        bool allZero = true;
        for (auto& g : gens)
            if (!g.isZero()) allZero = false;
        if (allZero) throw ParseError("the zero ideal cannot be resolved", idealLine, 1);
        p.ideal = Ideal(p.ring, std::move(gens));
    }
    return p;
}

static void certifyPrincipal(ResolutionTree& tree, const Problem& p) {
    for (auto& n : tree.nodes) {
        if (n.status != LeafStatus::Resolved) continue;
        Ideal total = totalTransform(p.ideal, n, p.ring);
        auto [weak, mults] = weakTransformExtract(total, n.exceptionals);
        if (!isTrivial(weak))
            throw std::logic_error("principalization certificate failed: weak transform not a unit");
        Monomial mono(p.ring->dim());
        for (size_t i = 0; i < n.exceptionals.size(); ++i)
            mono.e[n.exceptionals[i].coord] += mults[i].second;
        Ideal back = idealProduct(Ideal(p.ring, {Polynomial(p.ring, mono, 1)}), weak);
        if (!idealEqual(back, total))
            throw std::logic_error("principalization certificate failed: exponents do not multiply back");
        n.status = LeafStatus::Principalized;
        n.principalExponents = mults;
    }
}

ResolutionTree runProblem(const Problem& p, ResolveOptions opts) {
    opts.maxStages = p.maxStages;
    switch (p.task) {
        case Problem::Task::Resolve:
            return resolveBasicObject(p.ring, p.ideal, p.b, p.boundary, opts);
        case Problem::Task::Principalize:
            return principalize(p, opts);
        case Problem::Task::Embedded:
            return embeddedResolve(p, opts);
        case Problem::Task::Monomial: {
            std::vector<MonoDivisor> divs;
            for (size_t i = 0; i < p.boundary.size(); ++i)
                divs.push_back({static_cast<int>(i) + 1, p.boundary[i], p.mults[i]});
            return resolveMonomial(p.ring, divs, p.b, opts);
        }
    }
    throw std::logic_error("unreachable task");
}

ResolutionTree principalize(Problem p, ResolveOptions opts) {
    if (p.b != 1 || !p.boundary.empty())
        p.warning = "principalization forces b = 1 and an empty boundary";
    p.b = 1;
    p.boundary.clear();
    opts.maxStages = p.maxStages;
    ResolutionTree tree = resolveBasicObject(p.ring, p.ideal, 1, {}, opts);
    if (tree.halt == HaltReason::None) certifyPrincipal(tree, p);
    return tree;
}

ResolutionTree embeddedResolve(Problem p, ResolveOptions opts) {
    if (p.b != 1 || !p.boundary.empty())
        p.warning = "embedded resolution forces b = 1 and an empty boundary";
    p.b = 1;
    p.boundary.clear();
    opts.maxStages = p.maxStages;

    int stopStage = -1;
    std::vector<int> stopCharts;
    opts.onCenter = [&](int stage, const ChartState& cs, const ChartDecision& dec) {
        if (stopStage >= 0 && stage > stopStage) return;
        auto [weak, mults] = weakTransformExtract(cs.levels[0].J, ownExceptionals(cs.levels[0]));
        if (isTrivial(weak)) return; // the strict-transform proxy left this chart
        bool contained = true;
        for (auto& g : dec.centerIdeal.gens)
            if (!radicalMembership(g, weak)) { contained = false; break; }
        if (!contained) return;
        if (!jacobianSmooth(weak))
            throw std::logic_error("JacobianCheckFailed: swallowed strict transform is singular");
        stopStage = stage;
        stopCharts.push_back(cs.chart.id);
    };

    ResolutionTree tree = resolveBasicObject(p.ring, p.ideal, 1, {}, opts);
    if (tree.halt == HaltReason::None) certifyPrincipal(tree, p);
    tree.embeddedStopStage = stopStage;
    tree.embeddedStopCharts = stopCharts;
    for (int id : stopCharts)
        for (auto& n : tree.nodes)
            if (n.id == id) n.status = LeafStatus::StrictTransformSmooth;
    return tree;
}

// ---------------------------------------------------------------------------
// emission

namespace {

json tvalueJson(const TValue& t) {
    return json{{"w", ratToString(t.wOrd)}, {"n", t.n}};
}

json gammaJson(const GammaValue& g) {
    return json{{"g1", g.g1}, {"g2", ratToString(g.g2)}, {"g3", g.g3}};
}

json treeToJson(const ResolutionTree& tree, const RingPtr& ring) {
    json out;
    out["vars"] = ring->vars;
    out["halt"] = haltReasonName(tree.halt);
    out["embeddedStopStage"] = tree.embeddedStopStage;
    out["embeddedStopCharts"] = tree.embeddedStopCharts;
    std::vector<const TreeNode*> ordered;
    for (auto& n : tree.nodes) ordered.push_back(&n);
    std::sort(ordered.begin(), ordered.end(), [](const TreeNode* a, const TreeNode* b) {
        if (a->stage != b->stage) return a->stage < b->stage;
        return a->id < b->id;
    });
    json nodes = json::array();
    for (const TreeNode* n : ordered) {
        json jn;
        jn["id"] = n->id;
        jn["parent"] = n->parent;
        jn["stage"] = n->stage;
        jn["vars"] = ring->vars;
        jn["substitution"] = n->substitution;
        json exc = json::array();
        for (size_t i = 0; i < n->exceptionals.size(); ++i) {
            auto& H = n->exceptionals[i];
            uint32_t mult = 0;
            for (auto& [lbl, m] : n->divisorMults)
                if (lbl == H.label) mult = m;
            exc.push_back(json{{"label", H.label},
                               {"var", ring->vars[H.coord]},
                               {"birth", H.birthStage},
                               {"mult", mult}});
        }
        jn["exceptionals"] = exc;
        jn["status"] = leafStatusName(n->status);
        if (n->status == LeafStatus::Halted) jn["haltReason"] = haltReasonName(n->halt);
        if (!n->principalExponents.empty()) {
            json pe = json::array();
            for (auto& [lbl, m] : n->principalExponents) pe.push_back(json{{"label", lbl}, {"exp", m}});
            jn["principalExponents"] = pe;
        }
        nodes.push_back(jn);
    }
    out["nodes"] = nodes;
    json stages = json::array();
    for (auto& s : tree.stages) {
        json js;
        js["index"] = s.index;
        js["maxWOrd"] = ratToString(s.maxWOrd);
        js["maxT"] = s.maxT ? tvalueJson(*s.maxT) : json(nullptr);
        js["gamma"] = s.gamma ? gammaJson(*s.gamma) : json(nullptr);
        js["fd"] = fdToString(s.fd);
        if (s.halt != HaltReason::None) js["halt"] = haltReasonName(s.halt);
        json centers = json::array();
        for (auto& c : s.centers) {
            json jc;
            jc["chart"] = c.chartId;
            jc["ideal"] = idealToString(c.ideal);
            if (!c.divisorLabels.empty()) jc["divisors"] = c.divisorLabels;
            if (!c.note.empty()) jc["note"] = c.note;
            centers.push_back(jc);
        }
        js["centers"] = centers;
        stages.push_back(js);
    }
    out["stages"] = stages;
    return out;
}

std::string treeToText(const ResolutionTree& tree, const RingPtr& ring, bool withTrace) {
    std::ostringstream os;
    os << "charts: " << tree.nodes.size() << ", stages: " << tree.stages.size();
    if (tree.halt != HaltReason::None) os << ", halt: " << haltReasonName(tree.halt);
    if (tree.embeddedStopStage >= 0) {
        os << ", embedded stop: stage " << tree.embeddedStopStage << " at chart";
        for (int id : tree.embeddedStopCharts) os << " " << id;
    }
    os << "\n";
    std::vector<const TreeNode*> ordered;
    for (auto& n : tree.nodes) ordered.push_back(&n);
    std::sort(ordered.begin(), ordered.end(), [](const TreeNode* a, const TreeNode* b) {
        if (a->stage != b->stage) return a->stage < b->stage;
        return a->id < b->id;
    });
    for (const TreeNode* n : ordered) {
        os << "chart " << n->id;
        if (n->parent >= 0) os << " (stage " << n->stage << ", parent " << n->parent << ")";
        os << ": " << leafStatusName(n->status);
        if (n->status == LeafStatus::Halted) os << "(" << haltReasonName(n->halt) << ")";
        if (!n->substitution.empty()) os << "; sub " << n->substitution;
        if (!n->exceptionals.empty()) {
            os << "; except";
            for (auto& H : n->exceptionals) {
                uint32_t mult = 0;
                for (auto& [lbl, m] : n->divisorMults)
                    if (lbl == H.label) mult = m;
                os << " H" << H.label << "(" << ring->vars[H.coord] << ", born " << H.birthStage
                   << ", mult " << mult << ")";
            }
        }
        if (!n->principalExponents.empty()) {
            os << "; exponents";
            for (auto& [lbl, m] : n->principalExponents) os << " H" << lbl << "^" << m;
        }
        os << "\n";
    }
    for (auto& s : tree.stages) {
        os << "stage " << s.index << ":";
        if (s.gamma)
            os << " Gamma max = " << gammaToString(*s.gamma);
        else {
            os << " max w-ord = " << ratToString(s.maxWOrd);
            if (s.maxT) os << ", max t = (" << ratToString(s.maxT->wOrd) << "; " << s.maxT->n << ")";
        }
        if (withTrace) os << ", fd = " << fdToString(s.fd);
        if (s.halt != HaltReason::None) os << ", halted(" << haltReasonName(s.halt) << ")";
        for (auto& c : s.centers) {
            os << "; center chart " << c.chartId << " " << idealToString(c.ideal);
            if (!c.note.empty()) os << " [" << c.note << "]";
            if (!c.divisorLabels.empty()) {
                os << " {";
                for (size_t i = 0; i < c.divisorLabels.size(); ++i)
                    os << (i ? "," : "") << "H" << c.divisorLabels[i];
                os << "}";
            }
        }
        os << "\n";
    }
    return os.str();
}

} // namespace

std::string emitTree(const ResolutionTree& tree, const RingPtr& ring, EmitFormat fmt, bool withTrace) {
    if (fmt == EmitFormat::Text) return treeToText(tree, ring, withTrace);
    return treeToJson(tree, ring).dump(2) + "\n";
}

std::string reemitTreeJson(const std::string& jsonText) {
    json in = json::parse(jsonText);
    // typed mirror: every emitted field is read back and re-serialized
    json out;
    out["vars"] = in.at("vars");
    out["halt"] = in.at("halt").get<std::string>();
    out["embeddedStopStage"] = in.at("embeddedStopStage").get<int>();
    out["embeddedStopCharts"] = in.at("embeddedStopCharts").get<std::vector<int>>();
    json nodes = json::array();
    for (auto& jn : in.at("nodes")) {
        json n;
        n["id"] = jn.at("id").get<int>();
        n["parent"] = jn.at("parent").get<int>();
        n["stage"] = jn.at("stage").get<int>();
        n["vars"] = jn.at("vars").get<std::vector<std::string>>();
        n["substitution"] = jn.at("substitution").get<std::string>();
        json exc = json::array();
        for (auto& je : jn.at("exceptionals")) {
            exc.push_back(json{{"label", je.at("label").get<int>()},
                               {"var", je.at("var").get<std::string>()},
                               {"birth", je.at("birth").get<int>()},
                               {"mult", je.at("mult").get<uint32_t>()}});
        }
        n["exceptionals"] = exc;
        n["status"] = jn.at("status").get<std::string>();
        if (jn.contains("haltReason")) n["haltReason"] = jn.at("haltReason").get<std::string>();
        if (jn.contains("principalExponents")) {
            json pe = json::array();
            for (auto& jp : jn.at("principalExponents"))
                pe.push_back(json{{"label", jp.at("label").get<int>()}, {"exp", jp.at("exp").get<uint32_t>()}});
            n["principalExponents"] = pe;
        }
        nodes.push_back(n);
    }
    out["nodes"] = nodes;
    json stages = json::array();
    for (auto& js : in.at("stages")) {
        json s;
        s["index"] = js.at("index").get<int>();
        s["maxWOrd"] = js.at("maxWOrd").get<std::string>();
        s["maxT"] = js.at("maxT");
        s["gamma"] = js.at("gamma");
        s["fd"] = js.at("fd").get<std::string>();
        if (js.contains("halt")) s["halt"] = js.at("halt").get<std::string>();
        json centers = json::array();
        for (auto& jc : js.at("centers")) {
            json c;
            c["chart"] = jc.at("chart").get<int>();
            c["ideal"] = jc.at("ideal").get<std::string>();
            if (jc.contains("divisors")) c["divisors"] = jc.at("divisors").get<std::vector<int>>();
            if (jc.contains("note")) c["note"] = jc.at("note").get<std::string>();
            centers.push_back(c);
        }
        s["centers"] = centers;
        stages.push_back(s);
    }
    out["stages"] = stages;
    return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// built-in golden corpus

bool runSeedCorpus(std::ostream& os) {
    struct Case {
        std::string name;
        std::string input;
        std::function<bool(const ResolutionTree&, const Problem&)> check;
    };
    auto firstCenterIs = [](const ResolutionTree& t, const Problem& p, const std::string& gens) {
        if (t.stages.empty() || t.stages[0].centers.empty()) return false;
        Ideal want(p.ring, parsePolynomialList(gens, p.ring));
        return idealEqual(t.stages[0].centers[0].ideal, want);
    };
    auto allLeavesPrincipalized = [](const ResolutionTree& t) {
        if (t.halt != HaltReason::None) return false;
        for (auto& n : t.nodes) {
            bool isLeaf = true;
            for (auto& m : t.nodes)
                if (m.parent == n.id) isLeaf = false;
            if (isLeaf && n.status != LeafStatus::Principalized) return false;
        }
        return true;
    };

    std::vector<Case> cases;
    cases.push_back({"cusp-resolve",
                     "vars: x y\nideal: x^2 - y^3\nb: 2\ntask: resolve",
                     [&](const ResolutionTree& t, const Problem& p) {
                         return firstCenterIs(t, p, "x, y") && t.halt == HaltReason::None;
                     }});
    cases.push_back({"double-line",
                     "vars: x y\nideal: x^2\nb: 2\ntask: resolve",
                     [&](const ResolutionTree& t, const Problem& p) {
                         return t.stages.size() == 1 && firstCenterIs(t, p, "x");
                     }});
    cases.push_back({"two-planes-principalize",
                     "vars: x1 x2 x3\nideal: x1, x2*x3\ntask: principalize",
                     [&](const ResolutionTree& t, const Problem& p) {
                         return firstCenterIs(t, p, "x1, x2, x3") && allLeavesPrincipalized(t);
                     }});
    cases.push_back({"surface-4d",
                     "vars: x1 x2 x3 x4\nideal: x4^2 + x3^3 + x2*x3^2 + x1^3\nb: 2\nboundary: x3\ntask: resolve\nmaxStages: 40",
                     [&](const ResolutionTree& t, const Problem& p) {
                         return !t.stages.empty() && !t.stages[0].centers.empty() &&
                                idealEqual(t.stages[0].centers[0].ideal,
                                           Ideal(p.ring, parsePolynomialList("x1, x3, x4", p.ring)));
                     }});
    cases.push_back({"surface-3d",
                     "vars: x1 x2 x3\nideal: x3^3 + x2*x3^2 + x1^3\nb: 2\nboundary: x3\ntask: resolve\nmaxStages: 40",
                     [&](const ResolutionTree& t, const Problem& p) {
                         return !t.stages.empty() && !t.stages[0].centers.empty() &&
                                idealEqual(t.stages[0].centers[0].ideal,
                                           Ideal(p.ring, parsePolynomialList("x1, x2, x3", p.ring)));
                     }});
    cases.push_back({"quadric-pair-embedded",
                     "vars: x y z w\nideal: x^2 + y^2 + z^2 + w^2, x^6 + y^6 + z^6 + w^6\ntask: embedded",
                     [&](const ResolutionTree& t, const Problem& p) {
                         return t.halt == HaltReason::NonCoordinateCenter &&
                                firstCenterIs(t, p, "x, y, z, w");
                     }});
    cases.push_back({"monomial-two-divisors",
                     "vars: x y\nboundary: x y\nmults: x=3, y=3\nb: 2\ntask: monomial",
                     [&](const ResolutionTree& t, const Problem&) {
                         return t.stages.size() == 3 && t.halt == HaltReason::None;
                     }});
    cases.push_back({"whitney-umbrella",
                     "vars: x y z\nideal: x^2 - y^2*z\ntask: principalize\nmaxStages: 40",
                     [&](const ResolutionTree& t, const Problem& p) {
                         return firstCenterIs(t, p, "x, y, z");
                     }});

    bool all = true;
    for (auto& c : cases) {
        bool ok = false;
        std::string err;
        try {
            Problem p = parseProblem(c.input);
            ResolutionTree t = runProblem(p);
            ok = c.check(t, p);
        } catch (const std::exception& e) {
            err = e.what();
        }
        all = all && ok;
        os << (ok ? "PASS" : "FAIL") << "  " << c.name;
        if (!err.empty()) os << "  (" << err << ")";
        os << "\n";
    }
    return all;
}

} // namespace desing
