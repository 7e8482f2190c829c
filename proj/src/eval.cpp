#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "wdq/eval.hpp"

namespace wdq {

Mapping::Mapping(std::vector<std::pair<std::string, Term>> bindings)
    : bindings_(std::move(bindings)) {
    std::sort(bindings_.begin(), bindings_.end());
    bindings_.erase(std::unique(bindings_.begin(), bindings_.end()), bindings_.end());
}

std::optional<Term> Mapping::get(const std::string& var) const {
    for (const auto& [name, value] : bindings_)
        if (name == var) return value;
    return std::nullopt;
}

std::set<std::string> Mapping::domain() const {
    std::set<std::string> out;
    for (const auto& [name, value] : bindings_) out.insert(name);
    return out;
}

Mapping Mapping::bind(const std::string& var, Term value) const {
    auto b = bindings_;
    b.emplace_back(var, std::move(value));
    return Mapping(std::move(b));
}

Mapping Mapping::restrictTo(const std::set<std::string>& vars) const {
    std::vector<std::pair<std::string, Term>> b;
    for (const auto& binding : bindings_)
        if (vars.count(binding.first)) b.push_back(binding);
    return Mapping(std::move(b));
}

bool compatible(const Mapping& a, const Mapping& b) {
    for (const auto& [name, value] : a.bindings()) {
        auto other = b.get(name);
        if (other && *other != value) return false;
    }
    return true;
}

std::optional<Mapping> merge(const Mapping& a, const Mapping& b) {
    if (!compatible(a, b)) return std::nullopt;
    auto bindings = a.bindings();
    for (const auto& binding : b.bindings()) bindings.push_back(binding);
    return Mapping(std::move(bindings));
}

bool subsumes(const Mapping& sub, const Mapping& super) {
    for (const auto& [name, value] : sub.bindings()) {
        auto other = super.get(name);
        if (!other || *other != value) return false;
    }
    return true;
}

MappingSet::MappingSet(std::vector<Mapping> mappings) : mappings_(std::move(mappings)) {
    std::sort(mappings_.begin(), mappings_.end());
    mappings_.erase(std::unique(mappings_.begin(), mappings_.end()), mappings_.end());
}

bool MappingSet::contains(const Mapping& m) const {
    return std::binary_search(mappings_.begin(), mappings_.end(), m);
}

namespace {

/// Variables bound in every mapping of the set; hash-join keys must be
/// present on both sides unconditionally.
std::set<std::string> commonDomain(const MappingSet& omega) {
    std::set<std::string> out;
    bool first = true;
    for (const auto& mu : omega.mappings()) {
        auto dom = mu.domain();
        if (first) {
            out = std::move(dom);
            first = false;
        } else {
            std::set<std::string> kept;
            std::set_intersection(out.begin(), out.end(), dom.begin(), dom.end(),
                                  std::inserter(kept, kept.begin()));
            out = std::move(kept);
        }
        if (out.empty()) break;
    }
    return out;
}

std::string keyOf(const Mapping& mu, const std::vector<std::string>& keyVars) {
    std::string key;
    for (const auto& v : keyVars) {
        const Term t = *mu.get(v);
        key += std::to_string(static_cast<int>(t.kind));
        key += t.text;
        key += '\x1f';
    }
    return key;
}

}  // namespace

MappingSet join(const MappingSet& a, const MappingSet& b) {
    std::vector<Mapping> out;

    auto sharedA = commonDomain(a);
    auto sharedB = commonDomain(b);
    std::vector<std::string> keyVars;
    std::set_intersection(sharedA.begin(), sharedA.end(), sharedB.begin(), sharedB.end(),
                          std::back_inserter(keyVars));

    if (keyVars.empty()) {
        for (const auto& m1 : a.mappings())
            for (const auto& m2 : b.mappings())
                if (auto m = merge(m1, m2)) out.push_back(std::move(*m));
        return MappingSet(std::move(out));
    }

    // Hash partition the smaller side on the guaranteed-shared variables;
    // the probe still does the full compatibility check per candidate.
    const MappingSet& build = a.size() <= b.size() ? a : b;
    const MappingSet& probe = a.size() <= b.size() ? b : a;
    std::unordered_map<std::string, std::vector<const Mapping*>> table;
    for (const auto& m : build.mappings()) table[keyOf(m, keyVars)].push_back(&m);
    for (const auto& m2 : probe.mappings()) {
        auto it = table.find(keyOf(m2, keyVars));
        if (it == table.end()) continue;
        for (const Mapping* m1 : it->second)
            if (auto m = merge(*m1, m2)) out.push_back(std::move(*m));
    }
    return MappingSet(std::move(out));
}

MappingSet diff(const MappingSet& a, const MappingSet& b) {
    std::vector<Mapping> out;
    for (const auto& m1 : a.mappings()) {
        bool anyCompatible = false;
        for (const auto& m2 : b.mappings())
            if (compatible(m1, m2)) {
                anyCompatible = true;
                break;
            }
        if (!anyCompatible) out.push_back(m1);
    }
    return MappingSet(std::move(out));
}

MappingSet leftJoin(const MappingSet& a, const MappingSet& b) {
    return setUnion(join(a, b), diff(a, b));
}

MappingSet setUnion(const MappingSet& a, const MappingSet& b) {
    auto merged = a.mappings();
    merged.insert(merged.end(), b.mappings().begin(), b.mappings().end());
    return MappingSet(std::move(merged));
}

MappingSet project(const MappingSet& omega, const std::set<std::string>& vars) {
    std::vector<Mapping> out;
    for (const auto& mu : omega.mappings()) out.push_back(mu.restrictTo(vars));
    return MappingSet(std::move(out));
}

TruthValue evalConstraint(const ConstraintPtr& c, const Mapping& mu) {
    switch (c->kind) {
        case Constraint::Kind::Bound:
            return mu.bound(c->lhs.text) ? TruthValue::True : TruthValue::False;
        case Constraint::Kind::EqVarTerm: {
            auto v = mu.get(c->lhs.text);
            if (!v) return TruthValue::Error;
            return *v == c->rhs ? TruthValue::True : TruthValue::False;
        }
        case Constraint::Kind::EqVarVar: {
            auto v1 = mu.get(c->lhs.text);
            auto v2 = mu.get(c->rhs.text);
            if (!v1 || !v2) return TruthValue::Error;
            return *v1 == *v2 ? TruthValue::True : TruthValue::False;
        }
        case Constraint::Kind::Not: {
            switch (evalConstraint(c->left, mu)) {
                case TruthValue::True: return TruthValue::False;
                case TruthValue::False: return TruthValue::True;
                case TruthValue::Error: return TruthValue::Error;
            }
            return TruthValue::Error;
        }
        case Constraint::Kind::And: {
            auto l = evalConstraint(c->left, mu);
            auto r = evalConstraint(c->right, mu);
            if (l == TruthValue::False || r == TruthValue::False) return TruthValue::False;
            if (l == TruthValue::Error || r == TruthValue::Error) return TruthValue::Error;
            return TruthValue::True;
        }
        case Constraint::Kind::Or: {
            auto l = evalConstraint(c->left, mu);
            auto r = evalConstraint(c->right, mu);
            if (l == TruthValue::True || r == TruthValue::True) return TruthValue::True;
            if (l == TruthValue::Error || r == TruthValue::Error) return TruthValue::Error;
            return TruthValue::False;
        }
    }
    return TruthValue::Error;
}

namespace {

std::optional<Mapping> matchTriple(const TriplePattern& tp, const Triple& t) {
    Mapping mu;
    for (auto [patternTerm, dataTerm] :
         {std::pair{&tp.subject, &t.subject}, {&tp.predicate, &t.predicate},
          {&tp.object, &t.object}}) {
        if (patternTerm->isVar()) {
            auto existing = mu.get(patternTerm->text);
            if (existing) {
                if (*existing != *dataTerm) return std::nullopt;
            } else {
                mu = mu.bind(patternTerm->text, *dataTerm);
            }
        } else if (*patternTerm != *dataTerm) {
            return std::nullopt;
        }
    }
    return mu;
}

}  // namespace

MappingSet evalTriple(const TriplePattern& tp, const Graph& g) {
    // Scan the most selective index available; no constants means a full scan.
    const std::vector<std::size_t>* candidates = nullptr;
    if (tp.subject.isConstant()) candidates = &g.bySubject(tp.subject);
    if (tp.object.isConstant()) {
        const auto& byObj = g.byObject(tp.object);
        if (!candidates || byObj.size() < candidates->size()) candidates = &byObj;
    }
    if (tp.predicate.isConstant()) {
        const auto& byPred = g.byPredicate(tp.predicate);
        if (!candidates || byPred.size() < candidates->size()) candidates = &byPred;
    }

    std::vector<Mapping> out;
    auto tryMatch = [&](const Triple& t) {
        if (auto mu = matchTriple(tp, t)) out.push_back(std::move(*mu));
    };
    if (candidates) {
        for (std::size_t i : *candidates) tryMatch(g.triples()[i]);
    } else {
        for (const auto& t : g.triples()) tryMatch(t);
    }
    return MappingSet(std::move(out));
}

MappingSet evaluate(const PatternPtr& p, const Graph& g) {
    switch (p->kind) {
        case Pattern::Kind::Triple:
            return evalTriple(p->triplePattern, g);
        case Pattern::Kind::And:
            return join(evaluate(p->left, g), evaluate(p->right, g));
        case Pattern::Kind::Opt:
            return leftJoin(evaluate(p->left, g), evaluate(p->right, g));
        case Pattern::Kind::Union:
            return setUnion(evaluate(p->left, g), evaluate(p->right, g));
        case Pattern::Kind::Filter: {
            auto inner = evaluate(p->left, g);
            std::vector<Mapping> out;
            for (const auto& mu : inner.mappings())
                if (evalConstraint(p->condition, mu) == TruthValue::True) out.push_back(mu);
            return MappingSet(std::move(out));
        }
        case Pattern::Kind::Select:
            return project(evaluate(p->left, g),
                           {p->projection.begin(), p->projection.end()});
    }
    return {};
}

std::string toTsv(const MappingSet& omega) {
    std::ostringstream out;
    for (const auto& mu : omega.mappings()) {
        bool first = true;
        for (const auto& [name, value] : mu.bindings()) {
            if (!first) out << '\t';
            out << '?' << name << '=' << toString(value);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string toJsonLines(const MappingSet& omega) {
    std::ostringstream out;
    for (const auto& mu : omega.mappings()) {
        nlohmann::ordered_json record;
        for (const auto& [name, value] : mu.bindings()) record["?" + name] = toString(value);
        out << record.dump() << '\n';
    }
    return out.str();
}

}  // namespace wdq
