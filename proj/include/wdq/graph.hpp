#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "wdq/term.hpp"

namespace wdq {

/// A ground RDF triple; reuses the TriplePattern record with all three
/// positions constant.
using Triple = TriplePattern;

/// Immutable de-duplicated set of RDF triples with subject/predicate/object
/// lookup indexes. Safe to share across threads after construction.
class Graph {
  public:
    Graph() = default;

    /// Validates RDF typing ((I∪B) × I × (I∪B∪L)), de-duplicates, indexes.
    /// Throws std::invalid_argument on a malformed triple.
    static Graph fromTriples(std::vector<Triple> triples);

    const std::vector<Triple>& triples() const { return triples_; }
    std::size_t size() const { return triples_.size(); }

    /// Triple indices whose subject/predicate/object equals t; empty when
    /// the term is unknown.
    const std::vector<std::size_t>& bySubject(const Term& t) const;
    const std::vector<std::size_t>& byPredicate(const Term& t) const;
    const std::vector<std::size_t>& byObject(const Term& t) const;

  private:
    using Index = std::unordered_map<Term, std::vector<std::size_t>>;

    std::vector<Triple> triples_;
    Index subjectIndex_;
    Index predicateIndex_;
    Index objectIndex_;
};

}  // namespace wdq
