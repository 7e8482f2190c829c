#include <stdexcept>

#include "wdq/errors.hpp"
#include "wdq/normalform.hpp"
#include "wdq/surface.hpp"
#include "wdq/wellformed.hpp"

namespace wdq {
namespace {

void rejectUnsupported(const PatternPtr& p) {
    switch (p->kind) {
        case Pattern::Kind::Union:
            throw UnsupportedNode("cannot normalize a pattern containing UNION");
        case Pattern::Kind::Select:
            throw UnsupportedNode("cannot normalize a pattern containing SELECT");
        case Pattern::Kind::Triple:
            return;
        case Pattern::Kind::Filter:
            rejectUnsupported(p->left);
            return;
        case Pattern::Kind::And:
        case Pattern::Kind::Opt:
            rejectUnsupported(p->left);
            rejectUnsupported(p->right);
            return;
    }
}

std::optional<std::pair<PatternPtr, RewriteStep>> tryRewriteHere(const PatternPtr& p) {
    if (p->kind == Pattern::Kind::Filter && p->left->kind == Pattern::Kind::Opt) {
        const auto& optNode = p->left;
        auto result = Pattern::opt(optNode->optId, Pattern::filter(optNode->left, p->condition),
                                   optNode->right);
        return {{result, {RewriteRule::R1, {}, printPattern(p), printPattern(result)}}};
    }
    if (p->kind == Pattern::Kind::And && p->left->kind == Pattern::Kind::Opt) {
        const auto& optNode = p->left;
        auto result = Pattern::opt(optNode->optId, Pattern::andOf(optNode->left, p->right),
                                   optNode->right);
        return {{result, {RewriteRule::R2, {}, printPattern(p), printPattern(result)}}};
    }
    if (p->kind == Pattern::Kind::And && p->right->kind == Pattern::Kind::Opt) {
        const auto& optNode = p->right;
        auto result = Pattern::opt(optNode->optId, Pattern::andOf(p->left, optNode->left),
                                   optNode->right);
        return {{result, {RewriteRule::R3, {}, printPattern(p), printPattern(result)}}};
    }
    return std::nullopt;
}

// Post-order search: children before the node itself, left before right.
std::optional<std::pair<PatternPtr, RewriteStep>> rewriteInner(const PatternPtr& p) {
    auto rebuildWithChild = [&](int childIndex, const PatternPtr& newChild) -> PatternPtr {
        switch (p->kind) {
            case Pattern::Kind::And:
                return childIndex == 0 ? Pattern::andOf(newChild, p->right)
                                       : Pattern::andOf(p->left, newChild);
            case Pattern::Kind::Opt:
                return childIndex == 0 ? Pattern::opt(p->optId, newChild, p->right)
                                       : Pattern::opt(p->optId, p->left, newChild);
            case Pattern::Kind::Filter:
                return Pattern::filter(newChild, p->condition);
            default:
                return newChild;
        }
    };

    std::vector<PatternPtr> children;
    if (p->left) children.push_back(p->left);
    if (p->right && p->kind != Pattern::Kind::Filter) children.push_back(p->right);
    for (int i = 0; i < static_cast<int>(children.size()); ++i) {
        if (auto sub = rewriteInner(children[i])) {
            sub->second.path.insert(sub->second.path.begin(), i);
            return {{rebuildWithChild(i, sub->first), sub->second}};
        }
    }
    return tryRewriteHere(p);
}

}  // namespace

std::string toString(RewriteRule r) {
    switch (r) {
        case RewriteRule::R1: return "R1";
        case RewriteRule::R2: return "R2";
        case RewriteRule::R3: return "R3";
    }
    return {};
}

bool isOptNormalForm(const PatternPtr& p) {
    if (isAfPattern(p)) return true;
    return p->kind == Pattern::Kind::Opt && isOptNormalForm(p->left) && isOptNormalForm(p->right);
}

std::optional<std::pair<PatternPtr, RewriteStep>> applyRewriteStep(const PatternPtr& p) {
    rejectUnsupported(p);
    return rewriteInner(p);
}

std::pair<PatternPtr, RewriteTrace> toOptNormalForm(const PatternPtr& p) {
    auto violations = checkWellDesigned(p);
    if (!violations.empty())
        throw NotWellDesigned("pattern is not well-designed: " + violations.front().message);

    bool hadSelect = p->kind == Pattern::Kind::Select;
    PatternPtr body = hadSelect ? p->left : p;

    RewriteTrace trace;
    // Each step moves one OPT past one AND/FILTER, so #OPT * #nodes bounds
    // the rewrite; exceeding it means the strategy broke.
    int bound = optCount(body) * nodeCount(body) + 1;
    while (auto step = applyRewriteStep(body)) {
        body = step->first;
        trace.steps.push_back(std::move(step->second));
        if (static_cast<int>(trace.steps.size()) > bound)
            throw std::logic_error("rewrite step bound exceeded");
    }

    if (hadSelect) body = Pattern::select(p->projection, body);
    return {body, trace};
}

}  // namespace wdq
