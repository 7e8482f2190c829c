#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdq/pattern.hpp"

namespace wdq {

enum class RewriteRule { R1, R2, R3 };

std::string toString(RewriteRule r);

struct RewriteStep {
    RewriteRule rule;
    std::vector<int> path;  // child indices from the root to the rewritten node
    std::string before;
    std::string after;
};

struct RewriteTrace {
    std::vector<RewriteStep> steps;
};

/// True iff p is an AF-pattern or an Opt of two ONF patterns, recursively.
bool isOptNormalForm(const PatternPtr& p);

/// Apply one rewrite at the leftmost-innermost applicable position:
///   R1: (P OPT R) FILTER C  ->  (P FILTER C) OPT R
///   R2: (P OPT R) AND Q     ->  (P AND Q) OPT R
///   R3: P AND (Q OPT R)     ->  (P AND Q) OPT R
/// OptIds of moved nodes are preserved. Returns nothing when no rule
/// applies. Throws UnsupportedNode on Union/Select.
std::optional<std::pair<PatternPtr, RewriteStep>> applyRewriteStep(const PatternPtr& p);

/// Exhaustive rewriting of a well-designed pattern into OPT normal form.
/// A top-level Select is stripped and re-wrapped around the result.
/// Throws NotWellDesigned if the precondition fails.
std::pair<PatternPtr, RewriteTrace> toOptNormalForm(const PatternPtr& p);

}  // namespace wdq
