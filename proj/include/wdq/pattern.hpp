#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "wdq/term.hpp"

namespace wdq {

struct Constraint;
using ConstraintPtr = std::shared_ptr<const Constraint>;

/// Boolean combination of atomic filter conditions. Immutable; shared
/// subtrees are fine.
struct Constraint {
    enum class Kind { Bound, EqVarTerm, EqVarVar, Not, And, Or };

    Kind kind;
    Term lhs;               // Bound/EqVarTerm/EqVarVar: the variable
    Term rhs;               // EqVarTerm: the constant; EqVarVar: second variable
    ConstraintPtr left;     // Not/And/Or
    ConstraintPtr right;    // And/Or

    static ConstraintPtr bound(Term v);
    static ConstraintPtr eqVarTerm(Term v, Term constant);
    static ConstraintPtr eqVarVar(Term v1, Term v2);
    static ConstraintPtr negation(ConstraintPtr c);
    static ConstraintPtr conjunction(ConstraintPtr a, ConstraintPtr b);
    static ConstraintPtr disjunction(ConstraintPtr a, ConstraintPtr b);
};

bool constraintEquals(const ConstraintPtr& a, const ConstraintPtr& b);

/// Stable label for an OPT node, assigned in left-to-right preorder;
/// surfaces as the subscript in OPT1, OPT2, ... diagnostics.
struct OptId {
    int ordinal{0};
    friend bool operator==(const OptId&, const OptId&) = default;
};

struct Pattern;
using PatternPtr = std::shared_ptr<const Pattern>;

/// Algebraic pattern tree. Immutable after construction; all algebra
/// operations are pure functions, so sharing across threads is safe.
struct Pattern {
    enum class Kind { Triple, And, Opt, Union, Filter, Select };

    Kind kind;
    TriplePattern triplePattern;        // Triple
    PatternPtr left;                    // And/Opt/Union/Filter/Select
    PatternPtr right;                   // And/Opt/Union
    ConstraintPtr condition;            // Filter
    std::set<std::string> projection;   // Select: variable names
    OptId optId;                        // Opt

    static PatternPtr triple(TriplePattern tp);
    static PatternPtr triple(Term s, Term p, Term o);
    static PatternPtr andOf(PatternPtr l, PatternPtr r);
    static PatternPtr opt(PatternPtr l, PatternPtr r);
    static PatternPtr opt(OptId id, PatternPtr l, PatternPtr r);
    static PatternPtr unionOf(PatternPtr l, PatternPtr r);
    static PatternPtr filter(PatternPtr p, ConstraintPtr c);
    static PatternPtr select(std::set<std::string> vars, PatternPtr p);
};

/// Renumber OPT nodes 1,2,... in preorder. Programmatic constructions go
/// through this before anything cares about OptIds; the parser calls it.
PatternPtr assignOptIds(const PatternPtr& p);

std::set<std::string> variables(const TriplePattern& tp);
std::set<std::string> variables(const ConstraintPtr& c);
std::set<std::string> variables(const PatternPtr& p);

/// True iff p contains no Opt, Union, or Select node.
bool isAfPattern(const PatternPtr& p);

/// The non-optional head P0 of an ONF pattern (leftmost AF leaf of the
/// left OPT spine). Throws NotInOptNormalForm.
PatternPtr bgp(const PatternPtr& p);

/// The optional parts [P1, ..., Pm] of an ONF pattern, left to right;
/// empty for AF-patterns. Throws NotInOptNormalForm.
std::vector<PatternPtr> optionalParts(const PatternPtr& p);

/// OPT-depth: 0 for AF-patterns, else 1 + max over the optional parts.
/// Throws NotInOptNormalForm.
int optDepth(const PatternPtr& p);

/// Number of Opt nodes anywhere in p.
int optCount(const PatternPtr& p);

/// Number of nodes in the pattern tree (constraints count as one node).
int nodeCount(const PatternPtr& p);

/// Tree identity ignoring OptId labels.
bool structuralEquals(const PatternPtr& p, const PatternPtr& q);

}  // namespace wdq
