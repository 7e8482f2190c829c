#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wdq/errors.hpp"
#include "wdq/pattern.hpp"

namespace wdq {

/// Parse the SPARQL-like surface syntax:
///
///   [SELECT ?v1 ?v2 WHERE] { triple ( . triple)* OPTIONAL {...} FILTER(...) ... }
///
/// with `{A} UNION {B}`, Turtle-style terms (`<iri>`, bare IRIs, `"lit"`,
/// `?var`) and constraints built from BOUND(?v), `=`, `!=`, `&&`, `||`, `!`.
/// OptIds are assigned in preorder. Throws ParseError.
PatternPtr parsePattern(std::string_view text);

/// Round-trippable rendering: parsePattern(printPattern(p)) is structurally
/// equal to p.
std::string printPattern(const PatternPtr& p);

/// Pattern body without the outer braces (used for tree-node labels).
std::string printPatternBody(const PatternPtr& p);

std::string printConstraint(const ConstraintPtr& c);

/// Line-based N-Triples subset: `<iri>`, `_:blank`, `"literal"`, terminated
/// by `.`; `#` comment lines and blank lines are skipped. Throws ParseError
/// naming the offending line.
std::vector<TriplePattern> parseNTriples(std::string_view text);

}  // namespace wdq
