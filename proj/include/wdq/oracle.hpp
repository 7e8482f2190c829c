#pragma once

#include "wdq/eval.hpp"

namespace wdq {

/// Deliberately naive reference evaluator: no indexes, nested-loop set
/// algebra, coded independently of `evaluate`. Intended for desk-scale
/// inputs; throws ResourceLimit when an intermediate set exceeds the cap.
MappingSet bruteForceEvaluate(const PatternPtr& p, const Graph& g,
                              std::size_t intermediateCap = 1'000'000);

}  // namespace wdq
