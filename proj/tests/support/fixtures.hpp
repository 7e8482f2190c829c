#pragma once

#include <string>

#include "wdq/eval.hpp"
#include "wdq/graph.hpp"
#include "wdq/pattern.hpp"
#include "wdq/surface.hpp"

namespace fixtures {

using namespace wdq;

// ((?x rdf:type professor) OPT ((?x workFor ?y) OPT (?x teachOf ?z)))
inline PatternPtr sectionOneQ() {
    return parsePattern(
        "{?x rdf:type professor OPTIONAL {?x workFor ?y OPTIONAL {?x teachOf ?z}}}");
}

inline PatternPtr sectionOneQ1() { return parsePattern("{?x rdf:type professor}"); }

inline PatternPtr sectionOneQ2() {
    return parsePattern("{?x rdf:type professor OPTIONAL {?x workFor ?y}}");
}

// Generic AF leaf t_i = (?x, p<i>, ?v<i>), shared join variable ?x.
inline PatternPtr leaf(int i) {
    return Pattern::triple(Term::var("x"), Term::iri("p" + std::to_string(i)),
                           Term::var("v" + std::to_string(i)));
}

// (t1 OPT (t2 OPT t3)) OPT (t4 OPT t5)
inline PatternPtr deepNestedP() {
    return assignOptIds(
        Pattern::opt(Pattern::opt(leaf(1), Pattern::opt(leaf(2), leaf(3))),
                     Pattern::opt(leaf(4), leaf(5))));
}

// p0 = ((t1 AND t3) FILTER BOUND(?x))
inline PatternPtr headP0() {
    return Pattern::filter(Pattern::andOf(leaf(1), leaf(3)),
                           Constraint::bound(Term::var("x")));
}

// ((p0 OPT2 t2) OPT1 ((t4 OPT4 t5) OPT5 (t6 OPT5 t7))) with preorder ids,
// matching the worked-example tree's OPT1..OPT5 labels.
inline PatternPtr workedExampleP() {
    auto rightSubtree = Pattern::opt(Pattern::opt(leaf(4), leaf(5)),
                                     Pattern::opt(leaf(6), leaf(7)));
    return assignOptIds(Pattern::opt(Pattern::opt(headP0(), leaf(2)), rightSubtree));
}

inline const char* professorNTriples() {
    return "<JonSmith> <workFor> <SemanticUniversity> .\n"
           "<JonSmith> <teachOf> <LizBen> .\n"
           "<JonSmith> <rdf:type> <professor> .\n"
           "<LizBen> <rdf:type> <master> .\n"
           "<LizBen> <advisor> <JonSmith> .\n"
           "<LizBen> <takesCourse> <Ontology> .\n";
}

inline Graph professorGraph() {
    return Graph::fromTriples(parseNTriples(professorNTriples()));
}

inline Mapping mapping(std::initializer_list<std::pair<std::string, std::string>> iriBindings) {
    std::vector<std::pair<std::string, Term>> b;
    for (const auto& [var, iri] : iriBindings) b.emplace_back(var, Term::iri(iri));
    return Mapping(std::move(b));
}

}  // namespace fixtures
