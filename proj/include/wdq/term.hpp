#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

namespace wdq {

/// Ordered so that canonical output sorts Iri < Blank < Literal; variables
/// never appear in answers, so their position is irrelevant there.
enum class TermKind { Iri, Blank, Literal, Var };

/// An RDF term or query variable. Variable names are stored without the
/// leading `?`; IRIs without angle brackets.
struct Term {
    TermKind kind{TermKind::Iri};
    std::string text;

    static Term iri(std::string t) { return {TermKind::Iri, std::move(t)}; }
    static Term literal(std::string t) { return {TermKind::Literal, std::move(t)}; }
    static Term blank(std::string label) { return {TermKind::Blank, std::move(label)}; }
    static Term var(std::string name) { return {TermKind::Var, std::move(name)}; }

    bool isVar() const { return kind == TermKind::Var; }
    bool isConstant() const { return kind != TermKind::Var; }

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
};

/// Surface rendering: `?x`, `<iri>` or bare word, `"lit"`, `_:b`.
std::string toString(const Term& t);

struct TriplePattern {
    Term subject;
    Term predicate;
    Term object;

    friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
    friend auto operator<=>(const TriplePattern&, const TriplePattern&) = default;
};

std::string toString(const TriplePattern& tp);

}  // namespace wdq

template <>
struct std::hash<wdq::Term> {
    std::size_t operator()(const wdq::Term& t) const noexcept {
        return std::hash<std::string>{}(t.text) * 4 + static_cast<std::size_t>(t.kind);
    }
};
