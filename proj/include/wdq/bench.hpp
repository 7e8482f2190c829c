#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdq/eval.hpp"
#include "wdq/graph.hpp"
#include "wdq/pattern.hpp"

namespace wdq {

/// Shape of the well-designed tree of a generated benchmark query.
struct TreeShape {
    enum class Kind { Zigzag, LeftDeep, RightDeep, Full };
    Kind kind;
    int optCount;
};

std::string toString(TreeShape::Kind k);
std::optional<TreeShape::Kind> parseShapeKind(const std::string& name);

/// A well-designed ONF pattern whose tree has the requested shape and OPT
/// count. Leaves are AF-patterns over a shared join variable; the seed
/// picks leaf predicates. Throws ShapeInfeasible (e.g. Full needs 2^h - 1).
PatternPtr generateQuery(const TreeShape& shape, unsigned seed);

/// [(k, optCount(kApproximate(p, k))) for k = 0..kMax].
std::vector<std::pair<int, int>> optCountProfile(const PatternPtr& p, int kMax);

/// Deterministic synthetic university-domain graph; triple count grows
/// linearly with the university count.
Graph generateGraph(int universities, unsigned seed);

struct BenchRow {
    std::string query;
    int k;
    std::string dataset;
    double medianMs;
    std::size_t answers;
    int optCountAfter;
    std::string error;  // empty on success
};

struct BenchReport {
    std::vector<BenchRow> rows;

    std::string toCsv() const;
    std::string toJson() const;
};

struct NamedQuery {
    std::string name;
    PatternPtr pattern;
};

/// Evaluate kApproximate(q, k) for every query and k over the graph,
/// median wall time over `repeats` runs after one discarded warm-up.
/// Evaluation errors are recorded per row without aborting the run.
BenchReport runWorkload(const std::vector<NamedQuery>& queries, const Graph& graph,
                        const std::vector<int>& ks, int repeats,
                        const std::string& datasetName = "synthetic");

/// Search the zigzag family (all direction sequences for the OPT path) for
/// a tree whose optCount profile over k = 0..profile.size()-1 matches;
/// the published zigzag profile does not pin the shape down, so this is
/// report-only.
std::optional<PatternPtr> searchZigzagProfile(int optCount, const std::vector<int>& profile,
                                              unsigned seed);

}  // namespace wdq
