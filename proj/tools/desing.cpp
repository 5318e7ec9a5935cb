#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "desing/drivers.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Constructive desingularization of basic objects over the rationals"};

    std::string inputPath;
    std::string emitFormat = "text";
    int maxStages = -1;
    bool withTrace = false;
    bool seedCorpus = false;

    app.add_option("input", inputPath, "problem file (vars/ideal/b/boundary/task lines)");
    app.add_option("--emit", emitFormat, "output format: text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-stages", maxStages, "stage cap override");
    app.add_flag("--trace", withTrace, "include the full invariant trace per stage");
    app.add_flag("--seed-corpus", seedCorpus, "run the built-in golden examples and report pass/fail");

    CLI11_PARSE(app, argc, argv);

    if (seedCorpus) return desing::runSeedCorpus(std::cout) ? 0 : 1;

    if (inputPath.empty()) {
        std::cerr << "error: no input file (or use --seed-corpus)\n";
        return 2;
    }
    std::ifstream in(inputPath);
    if (!in) {
        std::cerr << "error: cannot open " << inputPath << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    try {
        desing::Problem p = desing::parseProblem(buf.str());
        if (maxStages > 0) p.maxStages = maxStages;
        desing::ResolutionTree tree = desing::runProblem(p);
        if (!p.warning.empty()) std::cerr << "warning: " << p.warning << "\n";
        auto fmt = emitFormat == "json" ? desing::EmitFormat::Json : desing::EmitFormat::Text;
        std::cout << desing::emitTree(tree, p.ring, fmt, withTrace);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
