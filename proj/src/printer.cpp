#include <string>

#include "wdq/surface.hpp"

namespace wdq {
namespace {

std::string body(const PatternPtr& p);

std::string braced(const PatternPtr& p) { return "{" + body(p) + "}"; }

// Elements of a group fold left to right, so a left operand that is itself
// an And/Opt/Filter chain can be emitted inline; anything else re-parses
// wrongly unless braced.
std::string inlineLeft(const PatternPtr& p) {
    switch (p->kind) {
        case Pattern::Kind::Triple:
        case Pattern::Kind::And:
        case Pattern::Kind::Opt:
        case Pattern::Kind::Filter:
            return body(p);
        default:
            return braced(p);
    }
}

std::string body(const PatternPtr& p) {
    switch (p->kind) {
        case Pattern::Kind::Triple:
            return toString(p->triplePattern);
        case Pattern::Kind::And: {
            std::string lhs =
                (p->left->kind == Pattern::Kind::Triple || p->left->kind == Pattern::Kind::And)
                    ? body(p->left)
                    : braced(p->left);
            std::string rhs =
                p->right->kind == Pattern::Kind::Triple ? body(p->right) : braced(p->right);
            return lhs + " . " + rhs;
        }
        case Pattern::Kind::Opt:
            return inlineLeft(p->left) + " OPTIONAL " + braced(p->right);
        case Pattern::Kind::Filter:
            return inlineLeft(p->left) + " FILTER(" + printConstraint(p->condition) + ")";
        case Pattern::Kind::Union:
            return braced(p->left) + " UNION " + braced(p->right);
        case Pattern::Kind::Select: {
            std::string s = "SELECT";
            for (const auto& v : p->projection) s += " ?" + v;
            return s + " WHERE " + braced(p->left);
        }
    }
    return {};
}

}  // namespace

std::string printConstraint(const ConstraintPtr& c) {
    switch (c->kind) {
        case Constraint::Kind::Bound:
            return "BOUND(" + toString(c->lhs) + ")";
        case Constraint::Kind::EqVarTerm:
        case Constraint::Kind::EqVarVar:
            return toString(c->lhs) + " = " + toString(c->rhs);
        case Constraint::Kind::Not:
            return "!(" + printConstraint(c->left) + ")";
        case Constraint::Kind::And:
            return "(" + printConstraint(c->left) + " && " + printConstraint(c->right) + ")";
        case Constraint::Kind::Or:
            return "(" + printConstraint(c->left) + " || " + printConstraint(c->right) + ")";
    }
    return {};
}

std::string printPatternBody(const PatternPtr& p) { return body(p); }

std::string printPattern(const PatternPtr& p) {
    if (p->kind == Pattern::Kind::Select) {
        std::string s = "SELECT";
        for (const auto& v : p->projection) s += " ?" + v;
        return s + " WHERE " + braced(p->left);
    }
    return braced(p);
}

}  // namespace wdq
