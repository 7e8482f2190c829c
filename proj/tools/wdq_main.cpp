#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wdq/bench.hpp"
#include "wdq/errors.hpp"
#include "wdq/eval.hpp"
#include "wdq/normalform.hpp"
#include "wdq/oracle.hpp"
#include "wdq/surface.hpp"
#include "wdq/wdtree.hpp"
#include "wdq/wellformed.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wdq::ParseError("cannot read file: " + path, {});
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// The query argument is a file path when one exists, inline text otherwise.
wdq::PatternPtr loadPattern(const std::string& pathOrQuery) {
    std::ifstream in(pathOrQuery, std::ios::binary);
    if (!in) return wdq::parsePattern(pathOrQuery);
    std::ostringstream buf;
    buf << in.rdbuf();
    return wdq::parsePattern(buf.str());
}

wdq::Graph loadGraph(const std::string& path) {
    return wdq::Graph::fromTriples(wdq::parseNTriples(readFile(path)));
}

std::string defaultFormat() {
    const char* env = std::getenv("WDQ_FORMAT");
    return env ? env : "tsv";
}

int cmdCheck(const std::string& queryFile) {
    auto violations = wdq::checkWellDesigned(loadPattern(queryFile));
    for (const auto& v : violations)
        std::cout << wdq::toString(v.kind) << ": " << v.message << "\n";
    return violations.empty() ? kExitOk : kExitViolation;
}

int cmdNormalize(const std::string& queryFile, bool trace) {
    auto [onf, rewriteTrace] = wdq::toOptNormalForm(loadPattern(queryFile));
    if (trace) {
        for (const auto& step : rewriteTrace.steps) {
            std::cout << "# " << wdq::toString(step.rule) << " at /";
            for (std::size_t i = 0; i < step.path.size(); ++i)
                std::cout << step.path[i] << (i + 1 < step.path.size() ? "/" : "");
            std::cout << "\n#   " << step.before << "\n#   -> " << step.after << "\n";
        }
    }
    std::cout << wdq::printPattern(onf) << "\n";
    return kExitOk;
}

int cmdDepth(const std::string& queryFile) {
    auto [onf, _] = wdq::toOptNormalForm(loadPattern(queryFile));
    auto body = onf->kind == wdq::Pattern::Kind::Select ? onf->left : onf;
    std::cout << wdq::optDepth(body) << "\n";
    return kExitOk;
}

int cmdTree(const std::string& queryFile, bool noNormalize) {
    auto p = loadPattern(queryFile);
    if (!noNormalize) p = wdq::toOptNormalForm(p).first;
    auto body = p->kind == wdq::Pattern::Kind::Select ? p->left : p;
    auto tree = wdq::buildTree(body);
    std::cout << wdq::renderTree(tree);
    std::cout << "\n" << wdq::renderLdltReport(wdq::leftDeepLevelTraversal(tree));
    return kExitOk;
}

int cmdApprox(const std::string& queryFile, int k, bool profile, bool showTree,
              bool noNormalize) {
    auto p = loadPattern(queryFile);
    if (!noNormalize) p = wdq::toOptNormalForm(p).first;
    bool hadSelect = p->kind == wdq::Pattern::Kind::Select;
    auto body = hadSelect ? p->left : p;

    auto approx = wdq::kApproximate(body, k);
    if (showTree) {
        auto tree = wdq::kApproximationTree(wdq::buildTree(body), k);
        std::cout << wdq::renderTree(tree) << "\n";
        std::cout << wdq::renderLdltReport(wdq::leftDeepLevelTraversal(wdq::buildTree(body)));
    }
    if (profile) {
        for (auto [kk, count] : wdq::optCountProfile(body, wdq::optDepth(body)))
            std::cout << "k=" << kk << " opt_count=" << count << "\n";
    }
    if (hadSelect) approx = wdq::Pattern::select(p->projection, approx);
    std::cout << wdq::printPattern(approx) << "\n";
    return kExitOk;
}

int cmdEval(const std::string& queryFile, const std::string& dataFile, int k,
            const std::string& format, bool noNormalize) {
    auto p = loadPattern(queryFile);
    auto graph = loadGraph(dataFile);
    if (k >= 0) {
        if (!noNormalize) p = wdq::toOptNormalForm(p).first;
        bool hadSelect = p->kind == wdq::Pattern::Kind::Select;
        auto body = hadSelect ? p->left : p;
        body = wdq::kApproximate(body, k);
        p = hadSelect ? wdq::Pattern::select(p->projection, body) : body;
    }
    auto start = std::chrono::steady_clock::now();
    auto answers = wdq::evaluate(p, graph);
    auto stop = std::chrono::steady_clock::now();
    std::cout << (format == "json" ? wdq::toJsonLines(answers) : wdq::toTsv(answers));
    std::cerr << "# answers=" << answers.size() << " time_ms="
              << std::chrono::duration<double, std::milli>(stop - start).count() << "\n";
    return kExitOk;
}

int cmdReductions(const std::string& queryFile) {
    for (const auto& r : wdq::reductions(loadPattern(queryFile)))
        std::cout << wdq::printPattern(r) << "\n";
    return kExitOk;
}

int cmdBench(const std::vector<std::string>& shapes, const std::vector<int>& optCounts,
             int kMax, const std::vector<int>& scales, unsigned seed, int repeats,
             const std::string& format, const std::string& outFile) {
    std::vector<wdq::NamedQuery> queries;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        auto kind = wdq::parseShapeKind(shapes[i]);
        if (!kind) throw wdq::ParseError("unknown shape: " + shapes[i], {});
        int target = i < optCounts.size() ? optCounts[i] : optCounts.back();
        queries.push_back({shapes[i] + "/" + std::to_string(target),
                           wdq::generateQuery({*kind, target}, seed)});
    }
    std::vector<int> ks;
    for (int k = 0; k <= kMax; ++k) ks.push_back(k);

    wdq::BenchReport combined;
    for (int scale : scales) {
        auto graph = wdq::generateGraph(scale, seed);
        auto report = wdq::runWorkload(queries, graph, ks, repeats,
                                       "synthetic" + std::to_string(scale));
        combined.rows.insert(combined.rows.end(), report.rows.begin(), report.rows.end());
    }

    std::string rendered = format == "json" ? combined.toJson() : combined.toCsv();
    if (outFile.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(outFile, std::ios::binary);
        out << rendered;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Well-designed SPARQL pattern approximation toolkit"};
    app.require_subcommand(1);

    std::string queryFile, dataFile, outFile;
    std::string format = defaultFormat();
    int k = -1;
    bool trace = false, profileFlag = false, showTree = false, noNormalize = false;
    std::vector<std::string> shapes{"zigzag", "left-deep", "right-deep", "full"};
    std::vector<int> optCounts{9, 4, 4, 15};
    std::vector<int> scales{1};
    int kMax = 4, repeats = 5;
    unsigned seed = 0;

    auto* check = app.add_subcommand("check", "verify well-designedness");
    check->add_option("query", queryFile)->required();

    auto* normalize = app.add_subcommand("normalize", "rewrite into OPT normal form");
    normalize->add_option("query", queryFile)->required();
    normalize->add_flag("--trace,-v", trace, "print the rewrite trace");

    auto* depth = app.add_subcommand("depth", "print the OPT-depth");
    depth->add_option("query", queryFile)->required();

    auto* tree = app.add_subcommand("tree", "print the well-designed tree and its traversal");
    tree->add_option("query", queryFile)->required();
    tree->add_flag("--no-normalize", noNormalize, "require the input to already be in ONF");

    auto* approx = app.add_subcommand("approx", "print the k-approximate pattern");
    approx->add_option("query", queryFile)->required();
    approx->add_option("--k,-k", k, "approximation depth")->required();
    approx->add_flag("--profile", profileFlag, "print the OPT-count profile");
    approx->add_flag("--tree", showTree, "print the pruned tree and traversal table");
    approx->add_flag("--no-normalize", noNormalize, "require the input to already be in ONF");

    auto* evalCmd = app.add_subcommand("eval", "evaluate a query over N-Triples data");
    evalCmd->add_option("query", queryFile)->required();
    evalCmd->add_option("data", dataFile)->required();
    evalCmd->add_option("--k,-k", k, "evaluate the k-approximation instead of the exact query");
    evalCmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    evalCmd->add_flag("--no-normalize", noNormalize, "skip ONF normalization before approximating");

    auto* reductionsCmd = app.add_subcommand("reductions", "print all one-step reductions");
    reductionsCmd->add_option("query", queryFile)->required();

    auto* bench = app.add_subcommand("bench", "run the shape/approximation workload");
    bench->add_option("--shapes", shapes, "tree shapes to generate");
    bench->add_option("--opt-counts", optCounts, "OPT count per shape");
    bench->add_option("--k-max", kMax);
    bench->add_option("--scales", scales, "synthetic dataset scales");
    bench->add_option("--seed", seed);
    bench->add_option("--repeats", repeats);
    bench->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "tsv"}));
    bench->add_option("--out", outFile, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmdCheck(queryFile);
        if (normalize->parsed()) return cmdNormalize(queryFile, trace);
        if (depth->parsed()) return cmdDepth(queryFile);
        if (tree->parsed()) return cmdTree(queryFile, noNormalize);
        if (approx->parsed()) return cmdApprox(queryFile, k, profileFlag, showTree, noNormalize);
        if (evalCmd->parsed()) return cmdEval(queryFile, dataFile, k, format, noNormalize);
        if (reductionsCmd->parsed()) return cmdReductions(queryFile);
        if (bench->parsed())
            return cmdBench(shapes, optCounts, kMax, scales, seed, repeats, format, outFile);
    } catch (const wdq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wdq::NotWellDesigned& e) {
        std::cerr << e.what() << "\n";
        return kExitViolation;
    } catch (const wdq::NotInOptNormalForm& e) {
        std::cerr << e.what() << "\n";
        return kExitViolation;
    } catch (const wdq::ShapeInfeasible& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
