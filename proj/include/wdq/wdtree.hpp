#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wdq/pattern.hpp"

namespace wdq {

struct WdTree;
using WdTreePtr = std::shared_ptr<const WdTree>;

/// Binary tree with OPT-labeled inner nodes and AF-pattern leaves; the
/// redesigned parse tree of a well-designed ONF pattern.
struct WdTree {
    bool leaf;
    OptId id;          // inner nodes
    WdTreePtr left;    // inner nodes
    WdTreePtr right;   // inner nodes
    PatternPtr af;     // leaves

    static WdTreePtr makeLeaf(PatternPtr afPattern);
    static WdTreePtr makeOpt(OptId id, WdTreePtr l, WdTreePtr r);

    /// "OPTn" for inner nodes, the printed AF-pattern body for leaves.
    std::string label() const;
};

/// Level-by-level account of the left-deep level traversal, in the layout
/// of the worked trace: per level the traversal list, the candidate nodes
/// (right children of that level's OPT nodes) and, per candidate, its
/// leftmost leaf or "×" for non-OPT candidates.
struct LdltReport {
    struct Level {
        std::vector<std::string> traversal;
        std::vector<std::string> candidates;
        std::vector<std::string> leftmost;
    };
    std::vector<Level> levels;
};

/// Structural mapping from a well-designed ONF pattern: Opt nodes become
/// inner nodes, maximal AF subpatterns become leaves.
/// Throws NotInOptNormalForm / NotWellDesigned.
WdTreePtr buildTree(const PatternPtr& p);

/// Inverse of buildTree.
PatternPtr toPattern(const WdTreePtr& t);

/// Root, then recursively the left child; a leaf yields itself.
std::vector<WdTreePtr> leftmostTraversal(const WdTreePtr& t);

/// The terminal leaf of the leftmost traversal (the non-optional part).
WdTreePtr leftmostLeaf(const WdTreePtr& t);

/// OPT-depth computed on the tree (equals optDepth(toPattern(t))).
int treeDepth(const WdTreePtr& t);

LdltReport leftDeepLevelTraversal(const WdTreePtr& t);

/// Prune every OPT candidate first reached at LDLT level k-1 down to its
/// leftmost leaf; k = 0 keeps only the leftmost leaf, k >= depth is the
/// identity.
WdTreePtr kApproximationTree(const WdTreePtr& t, int k);

/// toPattern(kApproximationTree(buildTree(p), k)).
/// Throws NotWellDesigned / NotInOptNormalForm.
PatternPtr kApproximate(const PatternPtr& p, int k);

/// All one-step reductions of p: one pattern per OPT occurrence, with that
/// (P1 OPT P2) replaced by P1. Deduplicated up to structural equality.
std::vector<PatternPtr> reductions(const PatternPtr& p);

/// Indented rendering of the tree for CLI output.
std::string renderTree(const WdTreePtr& t);

/// Example-1-style table rendering of the LDLT report.
std::string renderLdltReport(const LdltReport& report);

}  // namespace wdq
