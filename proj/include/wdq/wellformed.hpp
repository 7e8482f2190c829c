#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdq/pattern.hpp"

namespace wdq {

/// One reason a pattern falls outside the UNION-free well-designed fragment.
struct Violation {
    enum class Kind { UnsafeFilter, BadOptVariable, UnionPresent, NestedSelect };

    Kind kind;
    std::optional<OptId> optId;          // BadOptVariable: the offending OPT node
    std::optional<std::string> variable; // UnsafeFilter / BadOptVariable
    std::string message;
};

std::string toString(Violation::Kind k);

/// Empty iff every subpattern `Q FILTER C` satisfies var(C) ⊆ var(Q).
/// One UnsafeFilter per failing FILTER, in preorder.
std::vector<Violation> checkSafe(const PatternPtr& p);

/// Empty iff p is UNION-free, Select-free below a permitted top-level
/// Select, safe, and every OPT subpattern satisfies the well-designedness
/// variable condition. Violations are ordered by preorder position.
std::vector<Violation> checkWellDesigned(const PatternPtr& p);

}  // namespace wdq
