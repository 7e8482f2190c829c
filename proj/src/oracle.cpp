#include <vector>

#include "wdq/errors.hpp"
#include "wdq/oracle.hpp"

namespace wdq {
namespace {

// The oracle works on plain vectors with linear-scan de-duplication and
// nested-loop algebra; nothing here touches the indexed paths in eval.cpp.
using Bag = std::vector<Mapping>;

void checkCap(const Bag& bag, std::size_t cap) {
    if (bag.size() > cap)
        throw ResourceLimit("oracle intermediate result exceeded cap of " + std::to_string(cap));
}

void addUnique(Bag& bag, const Mapping& mu) {
    for (const auto& existing : bag)
        if (existing == mu) return;
    bag.push_back(mu);
}

bool naiveCompatible(const Mapping& a, const Mapping& b) {
    for (const auto& [na, va] : a.bindings())
        for (const auto& [nb, vb] : b.bindings())
            if (na == nb && !(va == vb)) return false;
    return true;
}

Mapping naiveUnite(const Mapping& a, const Mapping& b) {
    auto bindings = a.bindings();
    for (const auto& binding : b.bindings()) bindings.push_back(binding);
    return Mapping(bindings);
}

Bag naiveTriple(const TriplePattern& tp, const Graph& g) {
    Bag out;
    for (const auto& t : g.triples()) {
        Mapping mu;
        bool ok = true;
        for (auto [pt, dt] : {std::pair{&tp.subject, &t.subject}, {&tp.predicate, &t.predicate},
                              {&tp.object, &t.object}}) {
            if (pt->isVar()) {
                auto bound = mu.get(pt->text);
                if (bound && !(*bound == *dt)) {
                    ok = false;
                    break;
                }
                mu = mu.bind(pt->text, *dt);
            } else if (!(*pt == *dt)) {
                ok = false;
                break;
            }
        }
        if (ok) addUnique(out, mu);
    }
    return out;
}

Bag naiveEval(const PatternPtr& p, const Graph& g, std::size_t cap) {
    Bag out;
    switch (p->kind) {
        case Pattern::Kind::Triple:
            out = naiveTriple(p->triplePattern, g);
            break;
        case Pattern::Kind::And: {
            Bag l = naiveEval(p->left, g, cap);
            Bag r = naiveEval(p->right, g, cap);
            for (const auto& m1 : l)
                for (const auto& m2 : r)
                    if (naiveCompatible(m1, m2)) addUnique(out, naiveUnite(m1, m2));
            break;
        }
        case Pattern::Kind::Opt: {
            Bag l = naiveEval(p->left, g, cap);
            Bag r = naiveEval(p->right, g, cap);
            for (const auto& m1 : l)
                for (const auto& m2 : r)
                    if (naiveCompatible(m1, m2)) addUnique(out, naiveUnite(m1, m2));
            for (const auto& m1 : l) {
                bool anyCompatible = false;
                for (const auto& m2 : r)
                    if (naiveCompatible(m1, m2)) {
                        anyCompatible = true;
                        break;
                    }
                if (!anyCompatible) addUnique(out, m1);
            }
            break;
        }
        case Pattern::Kind::Union: {
            for (const auto& mu : naiveEval(p->left, g, cap)) addUnique(out, mu);
            for (const auto& mu : naiveEval(p->right, g, cap)) addUnique(out, mu);
            break;
        }
        case Pattern::Kind::Filter: {
            for (const auto& mu : naiveEval(p->left, g, cap))
                if (evalConstraint(p->condition, mu) == TruthValue::True) addUnique(out, mu);
            break;
        }
        case Pattern::Kind::Select: {
            std::set<std::string> keep(p->projection.begin(), p->projection.end());
            for (const auto& mu : naiveEval(p->left, g, cap)) {
                std::vector<std::pair<std::string, Term>> bindings;
                for (const auto& binding : mu.bindings())
                    if (keep.count(binding.first)) bindings.push_back(binding);
                addUnique(out, Mapping(std::move(bindings)));
            }
            break;
        }
    }
    checkCap(out, cap);
    return out;
}

}  // namespace

MappingSet bruteForceEvaluate(const PatternPtr& p, const Graph& g, std::size_t intermediateCap) {
    return MappingSet(naiveEval(p, g, intermediateCap));
}

}  // namespace wdq
