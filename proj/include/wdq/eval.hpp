#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wdq/graph.hpp"
#include "wdq/pattern.hpp"

namespace wdq {

enum class TruthValue { True, False, Error };

/// Finite partial function from variable names to constant terms.
/// Bindings are kept sorted by name, which makes comparison and canonical
/// output ordering the default lexicographic one.
class Mapping {
  public:
    Mapping() = default;
    explicit Mapping(std::vector<std::pair<std::string, Term>> bindings);

    const std::vector<std::pair<std::string, Term>>& bindings() const { return bindings_; }
    std::optional<Term> get(const std::string& var) const;
    bool bound(const std::string& var) const { return get(var).has_value(); }
    std::set<std::string> domain() const;
    bool empty() const { return bindings_.empty(); }

    Mapping bind(const std::string& var, Term value) const;
    Mapping restrictTo(const std::set<std::string>& vars) const;

    friend bool operator==(const Mapping&, const Mapping&) = default;
    friend auto operator<=>(const Mapping&, const Mapping&) = default;

  private:
    std::vector<std::pair<std::string, Term>> bindings_;
};

bool compatible(const Mapping& a, const Mapping& b);

/// Union of two compatible mappings; nullopt otherwise.
std::optional<Mapping> merge(const Mapping& a, const Mapping& b);

/// μ' ⊑ μ: μ agrees with μ' on all of dom(μ').
bool subsumes(const Mapping& sub, const Mapping& super);

/// Finite set of mappings with set semantics and canonical iteration order.
class MappingSet {
  public:
    MappingSet() = default;
    explicit MappingSet(std::vector<Mapping> mappings);

    const std::vector<Mapping>& mappings() const { return mappings_; }
    std::size_t size() const { return mappings_.size(); }
    bool empty() const { return mappings_.empty(); }
    bool contains(const Mapping& m) const;

    static MappingSet singletonEmptyMapping() { return MappingSet({Mapping{}}); }

    friend bool operator==(const MappingSet&, const MappingSet&) = default;

  private:
    std::vector<Mapping> mappings_;  // sorted, unique
};

MappingSet join(const MappingSet& a, const MappingSet& b);
MappingSet diff(const MappingSet& a, const MappingSet& b);
MappingSet leftJoin(const MappingSet& a, const MappingSet& b);
MappingSet setUnion(const MappingSet& a, const MappingSet& b);
MappingSet project(const MappingSet& omega, const std::set<std::string>& vars);

/// Three-valued constraint evaluation: equality atoms error on unbound
/// variables, BOUND never errors, Kleene tables for the connectives.
TruthValue evalConstraint(const ConstraintPtr& c, const Mapping& mu);

MappingSet evalTriple(const TriplePattern& tp, const Graph& g);

/// Full recursive pattern evaluation (handles every variant, including
/// UNION and SELECT).
MappingSet evaluate(const PatternPtr& p, const Graph& g);

/// One `?var=term` record per mapping, tab-separated, one line per mapping.
std::string toTsv(const MappingSet& omega);

/// One JSON object per mapping, one line per mapping.
std::string toJsonLines(const MappingSet& omega);

}  // namespace wdq
