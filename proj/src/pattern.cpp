#include "wdq/pattern.hpp"

#include <algorithm>

#include "wdq/errors.hpp"

namespace wdq {

ConstraintPtr Constraint::bound(Term v) {
    auto c = std::make_shared<Constraint>();
    c->kind = Kind::Bound;
    c->lhs = std::move(v);
    return c;
}

ConstraintPtr Constraint::eqVarTerm(Term v, Term constant) {
    auto c = std::make_shared<Constraint>();
    c->kind = Kind::EqVarTerm;
    c->lhs = std::move(v);
    c->rhs = std::move(constant);
    return c;
}

ConstraintPtr Constraint::eqVarVar(Term v1, Term v2) {
    auto c = std::make_shared<Constraint>();
    c->kind = Kind::EqVarVar;
    c->lhs = std::move(v1);
    c->rhs = std::move(v2);
    return c;
}

ConstraintPtr Constraint::negation(ConstraintPtr inner) {
    auto c = std::make_shared<Constraint>();
    c->kind = Kind::Not;
    c->left = std::move(inner);
    return c;
}

ConstraintPtr Constraint::conjunction(ConstraintPtr a, ConstraintPtr b) {
    auto c = std::make_shared<Constraint>();
    c->kind = Kind::And;
    c->left = std::move(a);
    c->right = std::move(b);
    return c;
}

ConstraintPtr Constraint::disjunction(ConstraintPtr a, ConstraintPtr b) {
    auto c = std::make_shared<Constraint>();
    c->kind = Kind::Or;
    c->left = std::move(a);
    c->right = std::move(b);
    return c;
}

bool constraintEquals(const ConstraintPtr& a, const ConstraintPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Constraint::Kind::Bound:
            return a->lhs == b->lhs;
        case Constraint::Kind::EqVarTerm:
        case Constraint::Kind::EqVarVar:
            return a->lhs == b->lhs && a->rhs == b->rhs;
        case Constraint::Kind::Not:
            return constraintEquals(a->left, b->left);
        case Constraint::Kind::And:
        case Constraint::Kind::Or:
            return constraintEquals(a->left, b->left) && constraintEquals(a->right, b->right);
    }
    return false;
}

PatternPtr Pattern::triple(TriplePattern tp) {
    auto p = std::make_shared<Pattern>();
    p->kind = Kind::Triple;
    p->triplePattern = std::move(tp);
    return p;
}

PatternPtr Pattern::triple(Term s, Term pred, Term o) {
    return triple(TriplePattern{std::move(s), std::move(pred), std::move(o)});
}

PatternPtr Pattern::andOf(PatternPtr l, PatternPtr r) {
    auto p = std::make_shared<Pattern>();
    p->kind = Kind::And;
    p->left = std::move(l);
    p->right = std::move(r);
    return p;
}

PatternPtr Pattern::opt(PatternPtr l, PatternPtr r) {
    return opt(OptId{0}, std::move(l), std::move(r));
}

PatternPtr Pattern::opt(OptId id, PatternPtr l, PatternPtr r) {
    auto p = std::make_shared<Pattern>();
    p->kind = Kind::Opt;
    p->optId = id;
    p->left = std::move(l);
    p->right = std::move(r);
    return p;
}

PatternPtr Pattern::unionOf(PatternPtr l, PatternPtr r) {
    auto p = std::make_shared<Pattern>();
    p->kind = Kind::Union;
    p->left = std::move(l);
    p->right = std::move(r);
    return p;
}

PatternPtr Pattern::filter(PatternPtr inner, ConstraintPtr c) {
    auto p = std::make_shared<Pattern>();
    p->kind = Kind::Filter;
    p->left = std::move(inner);
    p->condition = std::move(c);
    return p;
}

PatternPtr Pattern::select(std::set<std::string> vars, PatternPtr inner) {
    auto p = std::make_shared<Pattern>();
    p->kind = Kind::Select;
    p->projection = std::move(vars);
    p->left = std::move(inner);
    return p;
}

namespace {

PatternPtr renumber(const PatternPtr& p, int& next) {
    switch (p->kind) {
        case Pattern::Kind::Triple:
            return p;
        case Pattern::Kind::Opt: {
            OptId id{next++};
            auto l = renumber(p->left, next);
            auto r = renumber(p->right, next);
            return Pattern::opt(id, l, r);
        }
        case Pattern::Kind::And: {
            auto l = renumber(p->left, next);
            auto r = renumber(p->right, next);
            return Pattern::andOf(l, r);
        }
        case Pattern::Kind::Union: {
            auto l = renumber(p->left, next);
            auto r = renumber(p->right, next);
            return Pattern::unionOf(l, r);
        }
        case Pattern::Kind::Filter:
            return Pattern::filter(renumber(p->left, next), p->condition);
        case Pattern::Kind::Select:
            return Pattern::select(p->projection, renumber(p->left, next));
    }
    return p;
}

void collectVars(const ConstraintPtr& c, std::set<std::string>& out) {
    if (!c) return;
    switch (c->kind) {
        case Constraint::Kind::Bound:
            out.insert(c->lhs.text);
            break;
        case Constraint::Kind::EqVarTerm:
            out.insert(c->lhs.text);
            if (c->rhs.isVar()) out.insert(c->rhs.text);
            break;
        case Constraint::Kind::EqVarVar:
            out.insert(c->lhs.text);
            out.insert(c->rhs.text);
            break;
        case Constraint::Kind::Not:
            collectVars(c->left, out);
            break;
        case Constraint::Kind::And:
        case Constraint::Kind::Or:
            collectVars(c->left, out);
            collectVars(c->right, out);
            break;
    }
}

void collectVars(const PatternPtr& p, std::set<std::string>& out) {
    switch (p->kind) {
        case Pattern::Kind::Triple:
            for (const Term* t : {&p->triplePattern.subject, &p->triplePattern.predicate,
                                  &p->triplePattern.object})
                if (t->isVar()) out.insert(t->text);
            break;
        case Pattern::Kind::And:
        case Pattern::Kind::Opt:
        case Pattern::Kind::Union:
            collectVars(p->left, out);
            collectVars(p->right, out);
            break;
        case Pattern::Kind::Filter:
            collectVars(p->left, out);
            collectVars(p->condition, out);
            break;
        case Pattern::Kind::Select:
            collectVars(p->left, out);
            break;
    }
}

bool isOnf(const PatternPtr& p) {
    if (isAfPattern(p)) return true;
    return p->kind == Pattern::Kind::Opt && isOnf(p->left) && isOnf(p->right);
}

}  // namespace

PatternPtr assignOptIds(const PatternPtr& p) {
    int next = 1;
    return renumber(p, next);
}

std::set<std::string> variables(const TriplePattern& tp) {
    std::set<std::string> out;
    for (const Term* t : {&tp.subject, &tp.predicate, &tp.object})
        if (t->isVar()) out.insert(t->text);
    return out;
}

std::set<std::string> variables(const ConstraintPtr& c) {
    std::set<std::string> out;
    collectVars(c, out);
    return out;
}

std::set<std::string> variables(const PatternPtr& p) {
    std::set<std::string> out;
    collectVars(p, out);
    return out;
}

bool isAfPattern(const PatternPtr& p) {
    switch (p->kind) {
        case Pattern::Kind::Triple:
            return true;
        case Pattern::Kind::And:
            return isAfPattern(p->left) && isAfPattern(p->right);
        case Pattern::Kind::Filter:
            return isAfPattern(p->left);
        default:
            return false;
    }
}

PatternPtr bgp(const PatternPtr& p) {
    if (!isOnf(p)) throw NotInOptNormalForm("bgp: pattern is not in OPT normal form");
    auto cur = p;
    while (cur->kind == Pattern::Kind::Opt) cur = cur->left;
    return cur;
}

std::vector<PatternPtr> optionalParts(const PatternPtr& p) {
    if (!isOnf(p)) throw NotInOptNormalForm("optionalParts: pattern is not in OPT normal form");
    std::vector<PatternPtr> parts;
    auto cur = p;
    while (cur->kind == Pattern::Kind::Opt) {
        parts.push_back(cur->right);
        cur = cur->left;
    }
    // The walk collects right children top-down; syntactic order is bottom-up.
    std::reverse(parts.begin(), parts.end());
    return parts;
}

int optDepth(const PatternPtr& p) {
    auto parts = optionalParts(p);  // throws if not ONF
    int depth = 0;
    for (const auto& part : parts) depth = std::max(depth, optDepth(part) + 1);
    return depth;
}

int optCount(const PatternPtr& p) {
    switch (p->kind) {
        case Pattern::Kind::Triple:
            return 0;
        case Pattern::Kind::Opt:
            return 1 + optCount(p->left) + optCount(p->right);
        case Pattern::Kind::And:
        case Pattern::Kind::Union:
            return optCount(p->left) + optCount(p->right);
        case Pattern::Kind::Filter:
        case Pattern::Kind::Select:
            return optCount(p->left);
    }
    return 0;
}

int nodeCount(const PatternPtr& p) {
    switch (p->kind) {
        case Pattern::Kind::Triple:
            return 1;
        case Pattern::Kind::And:
        case Pattern::Kind::Opt:
        case Pattern::Kind::Union:
            return 1 + nodeCount(p->left) + nodeCount(p->right);
        case Pattern::Kind::Filter:
        case Pattern::Kind::Select:
            return 1 + nodeCount(p->left);
    }
    return 0;
}

bool structuralEquals(const PatternPtr& p, const PatternPtr& q) {
    if (p->kind != q->kind) return false;
    switch (p->kind) {
        case Pattern::Kind::Triple:
            return p->triplePattern == q->triplePattern;
        case Pattern::Kind::And:
        case Pattern::Kind::Opt:
        case Pattern::Kind::Union:
            return structuralEquals(p->left, q->left) && structuralEquals(p->right, q->right);
        case Pattern::Kind::Filter:
            return structuralEquals(p->left, q->left) && constraintEquals(p->condition, q->condition);
        case Pattern::Kind::Select:
            return p->projection == q->projection && structuralEquals(p->left, q->left);
    }
    return false;
}

}  // namespace wdq
