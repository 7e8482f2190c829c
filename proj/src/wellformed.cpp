#include <map>

#include "wdq/surface.hpp"
#include "wdq/wellformed.hpp"

namespace wdq {
namespace {

using Counts = std::map<std::string, int>;

void countOccurrences(const ConstraintPtr& c, Counts& out) {
    for (const auto& v : variables(c)) out[v] += 1;
}

// One count per syntactic mention; only "occurs at all" matters, but counts
// make the outside-the-subtree test a simple subtraction.
void countOccurrences(const PatternPtr& p, Counts& out) {
    switch (p->kind) {
        case Pattern::Kind::Triple:
            for (const Term* t : {&p->triplePattern.subject, &p->triplePattern.predicate,
                                  &p->triplePattern.object})
                if (t->isVar()) out[t->text] += 1;
            break;
        case Pattern::Kind::And:
        case Pattern::Kind::Opt:
        case Pattern::Kind::Union:
            countOccurrences(p->left, out);
            countOccurrences(p->right, out);
            break;
        case Pattern::Kind::Filter:
            countOccurrences(p->left, out);
            countOccurrences(p->condition, out);
            break;
        case Pattern::Kind::Select:
            countOccurrences(p->left, out);
            break;
    }
}

void checkSafeRec(const PatternPtr& p, std::vector<Violation>& out) {
    if (p->kind == Pattern::Kind::Filter) {
        auto inScope = variables(p->left);
        for (const auto& v : variables(p->condition)) {
            if (!inScope.count(v)) {
                out.push_back({Violation::Kind::UnsafeFilter, std::nullopt, v,
                               "unsafe FILTER: ?" + v + " does not occur in {" +
                                   printPatternBody(p->left) + "}"});
                break;
            }
        }
    }
    switch (p->kind) {
        case Pattern::Kind::Triple:
            break;
        case Pattern::Kind::And:
        case Pattern::Kind::Opt:
        case Pattern::Kind::Union:
            checkSafeRec(p->left, out);
            checkSafeRec(p->right, out);
            break;
        case Pattern::Kind::Filter:
        case Pattern::Kind::Select:
            checkSafeRec(p->left, out);
            break;
    }
}

struct WellDesignedChecker {
    Counts total;
    std::vector<Violation> out;

    void visit(const PatternPtr& p) {
        switch (p->kind) {
            case Pattern::Kind::Triple:
                return;
            case Pattern::Kind::Union:
                out.push_back({Violation::Kind::UnionPresent, std::nullopt, std::nullopt,
                               "UNION is outside the well-designed fragment: {" +
                                   printPatternBody(p) + "}"});
                visit(p->left);
                visit(p->right);
                return;
            case Pattern::Kind::Select:
                out.push_back({Violation::Kind::NestedSelect, std::nullopt, std::nullopt,
                               "nested SELECT is not allowed: {" + printPatternBody(p) + "}"});
                visit(p->left);
                return;
            case Pattern::Kind::Filter: {
                auto inScope = variables(p->left);
                for (const auto& v : variables(p->condition)) {
                    if (!inScope.count(v)) {
                        out.push_back({Violation::Kind::UnsafeFilter, std::nullopt, v,
                                       "unsafe FILTER: ?" + v + " does not occur in {" +
                                           printPatternBody(p->left) + "}"});
                        break;
                    }
                }
                visit(p->left);
                return;
            }
            case Pattern::Kind::And:
                visit(p->left);
                visit(p->right);
                return;
            case Pattern::Kind::Opt: {
                Counts inSubtree;
                countOccurrences(p, inSubtree);
                auto leftVars = variables(p->left);
                for (const auto& v : variables(p->right)) {
                    bool outside = total[v] > inSubtree[v];
                    if (outside && !leftVars.count(v)) {
                        out.push_back(
                            {Violation::Kind::BadOptVariable, p->optId, v,
                             "?" + v + " occurs in the optional part of OPT" +
                                 std::to_string(p->optId.ordinal) + " {" + printPatternBody(p) +
                                 "} and outside it, but not in the non-optional part"});
                    }
                }
                visit(p->left);
                visit(p->right);
                return;
            }
        }
    }
};

}  // namespace

std::string toString(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::UnsafeFilter: return "UnsafeFilter";
        case Violation::Kind::BadOptVariable: return "BadOptVariable";
        case Violation::Kind::UnionPresent: return "UnionPresent";
        case Violation::Kind::NestedSelect: return "NestedSelect";
    }
    return {};
}

std::vector<Violation> checkSafe(const PatternPtr& p) {
    std::vector<Violation> out;
    checkSafeRec(p, out);
    return out;
}

std::vector<Violation> checkWellDesigned(const PatternPtr& p) {
    // A single top-level SELECT is an output projection wrapper, not part
    // of the checked pattern body.
    PatternPtr body = p->kind == Pattern::Kind::Select ? p->left : p;
    WellDesignedChecker checker;
    countOccurrences(body, checker.total);
    checker.visit(body);
    return checker.out;
}

}  // namespace wdq
