#include <algorithm>
#include <stdexcept>

#include "wdq/graph.hpp"

namespace wdq {

Graph Graph::fromTriples(std::vector<Triple> triples) {
    for (const auto& t : triples) {
        if (t.subject.kind == TermKind::Literal || t.subject.isVar())
            throw std::invalid_argument("triple subject must be an IRI or blank node: " +
                                        toString(t));
        if (t.predicate.kind != TermKind::Iri)
            throw std::invalid_argument("triple predicate must be an IRI: " + toString(t));
        if (t.object.isVar())
            throw std::invalid_argument("triple object must be a constant: " + toString(t));
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

    Graph g;
    g.triples_ = std::move(triples);
    for (std::size_t i = 0; i < g.triples_.size(); ++i) {
        g.subjectIndex_[g.triples_[i].subject].push_back(i);
        g.predicateIndex_[g.triples_[i].predicate].push_back(i);
        g.objectIndex_[g.triples_[i].object].push_back(i);
    }
    return g;
}

namespace {
const std::vector<std::size_t> kEmpty;

const std::vector<std::size_t>& lookup(const std::unordered_map<Term, std::vector<std::size_t>>& ix,
                                       const Term& t) {
    auto it = ix.find(t);
    return it == ix.end() ? kEmpty : it->second;
}
}  // namespace

const std::vector<std::size_t>& Graph::bySubject(const Term& t) const {
    return lookup(subjectIndex_, t);
}
const std::vector<std::size_t>& Graph::byPredicate(const Term& t) const {
    return lookup(predicateIndex_, t);
}
const std::vector<std::size_t>& Graph::byObject(const Term& t) const {
    return lookup(objectIndex_, t);
}

}  // namespace wdq
