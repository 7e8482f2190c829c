#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "wdq/errors.hpp"
#include "wdq/normalform.hpp"
#include "wdq/surface.hpp"
#include "wdq/wdtree.hpp"
#include "wdq/wellformed.hpp"

namespace wdq {
namespace {

WdTreePtr buildRec(const PatternPtr& p) {
    if (p->kind == Pattern::Kind::Opt)
        return WdTree::makeOpt(p->optId, buildRec(p->left), buildRec(p->right));
    return WdTree::makeLeaf(p);
}

/// Right children along the left OPT spine, i.e. the tree counterpart of
/// the optional parts of an ONF pattern.
std::vector<WdTreePtr> spineParts(const WdTreePtr& t) {
    std::vector<WdTreePtr> parts;
    auto cur = t;
    while (!cur->leaf) {
        parts.push_back(cur->right);
        cur = cur->left;
    }
    return parts;
}

struct Levels {
    std::vector<std::vector<WdTreePtr>> traversals;
    std::vector<std::vector<WdTreePtr>> candidates;
};

Levels computeLevels(const WdTreePtr& t) {
    Levels out;
    std::vector<WdTreePtr> frontier{t};
    while (true) {
        std::vector<WdTreePtr> traversal;
        for (const auto& node : frontier) {
            auto lt = leftmostTraversal(node);
            traversal.insert(traversal.end(), lt.begin(), lt.end());
        }
        std::vector<WdTreePtr> cands;
        for (const auto& node : traversal)
            if (!node->leaf) cands.push_back(node->right);
        out.traversals.push_back(std::move(traversal));
        bool done = cands.empty();
        out.candidates.push_back(std::move(cands));
        if (done) break;
        frontier = out.candidates.back();
    }
    return out;
}

WdTreePtr pruneMarked(const WdTreePtr& t, const std::set<const WdTree*>& marked) {
    if (marked.count(t.get())) return leftmostLeaf(t);
    if (t->leaf) return t;
    return WdTree::makeOpt(t->id, pruneMarked(t->left, marked), pruneMarked(t->right, marked));
}

void renderRec(const WdTreePtr& t, const std::string& prefix, bool last, bool root,
               std::ostringstream& out) {
    if (!root) {
        out << prefix << (last ? "└── " : "├── ");
    }
    out << t->label() << "\n";
    if (t->leaf) return;
    std::string childPrefix = root ? "" : prefix + (last ? "    " : "│   ");
    renderRec(t->left, childPrefix, false, false, out);
    renderRec(t->right, childPrefix, true, false, out);
}

std::size_t displayWidth(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;  // count UTF-8 lead bytes
    return w;
}

std::string joined(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    return out;
}

}  // namespace

WdTreePtr WdTree::makeLeaf(PatternPtr afPattern) {
    auto t = std::make_shared<WdTree>();
    t->leaf = true;
    t->af = std::move(afPattern);
    return t;
}

WdTreePtr WdTree::makeOpt(OptId id, WdTreePtr l, WdTreePtr r) {
    auto t = std::make_shared<WdTree>();
    t->leaf = false;
    t->id = id;
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

std::string WdTree::label() const {
    return leaf ? printPatternBody(af) : "OPT" + std::to_string(id.ordinal);
}

WdTreePtr buildTree(const PatternPtr& p) {
    if (!isOptNormalForm(p))
        throw NotInOptNormalForm("buildTree: pattern is not in OPT normal form");
    auto violations = checkWellDesigned(p);
    if (!violations.empty())
        throw NotWellDesigned("buildTree: pattern is not well-designed: " +
                              violations.front().message);
    return buildRec(p);
}

PatternPtr toPattern(const WdTreePtr& t) {
    if (t->leaf) return t->af;
    return Pattern::opt(t->id, toPattern(t->left), toPattern(t->right));
}

std::vector<WdTreePtr> leftmostTraversal(const WdTreePtr& t) {
    std::vector<WdTreePtr> out;
    auto cur = t;
    while (!cur->leaf) {
        out.push_back(cur);
        cur = cur->left;
    }
    out.push_back(cur);
    return out;
}

WdTreePtr leftmostLeaf(const WdTreePtr& t) { return leftmostTraversal(t).back(); }

int treeDepth(const WdTreePtr& t) {
    int depth = 0;
    for (const auto& part : spineParts(t)) depth = std::max(depth, treeDepth(part) + 1);
    return depth;
}

LdltReport leftDeepLevelTraversal(const WdTreePtr& t) {
    Levels levels = computeLevels(t);
    LdltReport report;
    for (std::size_t i = 0; i < levels.traversals.size(); ++i) {
        LdltReport::Level level;
        for (const auto& node : levels.traversals[i]) level.traversal.push_back(node->label());
        for (const auto& cand : levels.candidates[i]) {
            level.candidates.push_back(cand->label());
            level.leftmost.push_back(cand->leaf ? "×" : leftmostLeaf(cand)->label());
        }
        report.levels.push_back(std::move(level));
    }
    return report;
}

WdTreePtr kApproximationTree(const WdTreePtr& t, int k) {
    if (k <= 0) return leftmostLeaf(t);
    if (k >= treeDepth(t)) return t;
    Levels levels = computeLevels(t);
    // Candidates first reached at level k-1 whose subtrees are OPT nodes
    // get truncated to their leftmost leaves; everything below goes with
    // them.
    std::set<const WdTree*> marked;
    for (const auto& cand : levels.candidates[static_cast<std::size_t>(k - 1)])
        if (!cand->leaf) marked.insert(cand.get());
    return pruneMarked(t, marked);
}

PatternPtr kApproximate(const PatternPtr& p, int k) {
    return toPattern(kApproximationTree(buildTree(p), k));
}

std::vector<PatternPtr> reductions(const PatternPtr& p) {
    std::vector<PatternPtr> out;
    auto add = [&out](const PatternPtr& q) {
        for (const auto& existing : out)
            if (structuralEquals(existing, q)) return;
        out.push_back(q);
    };

    if (p->kind == Pattern::Kind::Opt) add(p->left);

    auto rebuildLeft = [&p](const PatternPtr& l) -> PatternPtr {
        switch (p->kind) {
            case Pattern::Kind::And: return Pattern::andOf(l, p->right);
            case Pattern::Kind::Opt: return Pattern::opt(p->optId, l, p->right);
            case Pattern::Kind::Union: return Pattern::unionOf(l, p->right);
            case Pattern::Kind::Filter: return Pattern::filter(l, p->condition);
            case Pattern::Kind::Select: return Pattern::select(p->projection, l);
            default: return l;
        }
    };
    auto rebuildRight = [&p](const PatternPtr& r) -> PatternPtr {
        switch (p->kind) {
            case Pattern::Kind::And: return Pattern::andOf(p->left, r);
            case Pattern::Kind::Opt: return Pattern::opt(p->optId, p->left, r);
            case Pattern::Kind::Union: return Pattern::unionOf(p->left, r);
            default: return r;
        }
    };

    if (p->left)
        for (const auto& l : reductions(p->left)) add(rebuildLeft(l));
    bool hasRightChild = p->kind == Pattern::Kind::And || p->kind == Pattern::Kind::Opt ||
                         p->kind == Pattern::Kind::Union;
    if (hasRightChild)
        for (const auto& r : reductions(p->right)) add(rebuildRight(r));
    return out;
}

std::string renderTree(const WdTreePtr& t) {
    std::ostringstream out;
    renderRec(t, "", true, true, out);
    return out.str();
}

std::string renderLdltReport(const LdltReport& report) {
    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"Level", "Traversal List", "Candidates", "Leftmost"});
    for (std::size_t i = 0; i < report.levels.size(); ++i) {
        const auto& level = report.levels[i];
        rows.push_back({std::to_string(i), joined(level.traversal), joined(level.candidates),
                        joined(level.leftmost)});
    }
    std::array<std::size_t, 4> widths{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 4; ++c) widths[c] = std::max(widths[c], displayWidth(row[c]));
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 4; ++c) {
            out << row[c] << std::string(widths[c] - displayWidth(row[c]), ' ');
            out << (c + 1 < 4 ? " | " : "");
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace wdq
