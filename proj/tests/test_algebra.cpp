#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "wdq/errors.hpp"
#include "wdq/normalform.hpp"
#include "wdq/pattern.hpp"

using namespace wdq;

TEST_CASE("variables of triple patterns and full patterns") {
    auto tp = TriplePattern{Term::var("x"), Term::iri("rdf:type"), Term::iri("professor")};
    CHECK(variables(tp) == std::set<std::string>{"x"});

    auto ground = TriplePattern{Term::iri("JonSmith"), Term::iri("workFor"),
                                Term::iri("SemanticUniversity")};
    CHECK(variables(ground).empty());

    CHECK(variables(fixtures::sectionOneQ()) == std::set<std::string>{"x", "y", "z"});
}

TEST_CASE("variables sees filter constraints") {
    auto p = Pattern::filter(fixtures::leaf(1), Constraint::bound(Term::var("q")));
    CHECK(variables(p) == std::set<std::string>{"x", "v1", "q"});
}

TEST_CASE("isAfPattern") {
    CHECK(isAfPattern(fixtures::headP0()));
    CHECK_FALSE(isAfPattern(Pattern::opt(fixtures::leaf(1), fixtures::leaf(2))));
    CHECK_FALSE(isAfPattern(Pattern::select({"x"}, fixtures::leaf(1))));
    CHECK_FALSE(isAfPattern(Pattern::unionOf(fixtures::leaf(1), fixtures::leaf(2))));
}

TEST_CASE("bgp returns the non-optional head") {
    auto q = fixtures::sectionOneQ();
    CHECK(structuralEquals(bgp(q), fixtures::sectionOneQ1()));

    auto af = fixtures::headP0();
    CHECK(structuralEquals(bgp(af), af));

    CHECK(structuralEquals(bgp(fixtures::deepNestedP()), fixtures::leaf(1)));
}

TEST_CASE("bgp rejects non-ONF input") {
    auto nonOnf = Pattern::andOf(Pattern::opt(fixtures::leaf(1), fixtures::leaf(2)),
                                 fixtures::leaf(3));
    CHECK_THROWS_AS(bgp(nonOnf), NotInOptNormalForm);
    CHECK_THROWS_AS(optionalParts(nonOnf), NotInOptNormalForm);
    CHECK_THROWS_AS(optDepth(nonOnf), NotInOptNormalForm);
}

TEST_CASE("optionalParts in syntactic order") {
    auto parts = optionalParts(fixtures::deepNestedP());
    REQUIRE(parts.size() == 2);
    CHECK(structuralEquals(parts[0], Pattern::opt(fixtures::leaf(2), fixtures::leaf(3))));
    CHECK(structuralEquals(parts[1], Pattern::opt(fixtures::leaf(4), fixtures::leaf(5))));

    CHECK(optionalParts(fixtures::headP0()).empty());

    auto worked = optionalParts(fixtures::workedExampleP());
    REQUIRE(worked.size() == 2);
    CHECK(structuralEquals(worked[0], fixtures::leaf(2)));
    CHECK(worked[1]->kind == Pattern::Kind::Opt);
}

TEST_CASE("optDepth") {
    CHECK(optDepth(fixtures::sectionOneQ()) == 2);
    CHECK(optDepth(fixtures::deepNestedP()) == 2);
    CHECK(optDepth(fixtures::headP0()) == 0);
    CHECK(optDepth(fixtures::workedExampleP()) == 3);
}

TEST_CASE("optCount") {
    CHECK(optCount(fixtures::headP0()) == 0);

    // left-deep chain of 4 OPTs
    auto chain = fixtures::leaf(0);
    for (int i = 1; i <= 4; ++i) chain = Pattern::opt(chain, fixtures::leaf(i));
    CHECK(optCount(chain) == 4);

    // full OPT tree of height 4
    std::function<PatternPtr(int, int&)> full = [&](int h, int& idx) -> PatternPtr {
        if (h == 0) return fixtures::leaf(idx++);
        auto l = full(h - 1, idx);
        auto r = full(h - 1, idx);
        return Pattern::opt(l, r);
    };
    int idx = 0;
    CHECK(optCount(full(4, idx)) == 15);
}

TEST_CASE("structuralEquals ignores OptIds and is order-sensitive") {
    auto a = Pattern::opt(OptId{1}, fixtures::leaf(1), fixtures::leaf(2));
    auto b = Pattern::opt(OptId{7}, fixtures::leaf(1), fixtures::leaf(2));
    auto swapped = Pattern::opt(fixtures::leaf(2), fixtures::leaf(1));
    CHECK(structuralEquals(a, b));
    CHECK(structuralEquals(a, a));
    CHECK_FALSE(structuralEquals(a, swapped));
}

TEST_CASE("ONF measures agree: depth 0 == AF == no optional parts") {
    std::mt19937 rng(42);
    for (int i = 0; i < 50; ++i) {
        auto p = toOptNormalForm(gen::randomWellDesigned(rng, 6)).first;
        bool af = isAfPattern(p);
        CHECK((optDepth(p) == 0) == af);
        CHECK(optionalParts(p).empty() == af);
        auto inner = variables(bgp(p));
        auto outer = variables(p);
        CHECK(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));

        int m = static_cast<int>(optionalParts(p).size());
        int sum = m;
        for (const auto& part : optionalParts(p)) sum += optCount(part);
        CHECK(optCount(p) == sum);
    }
}

TEST_CASE("structuralEquals is an equivalence relation on random patterns") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        auto p = gen::randomPattern(rng, 5, true);
        auto q = gen::randomPattern(rng, 5, true);
        auto r = gen::randomPattern(rng, 5, true);
        CHECK(structuralEquals(p, p));
        CHECK(structuralEquals(p, q) == structuralEquals(q, p));
        if (structuralEquals(p, q) && structuralEquals(q, r)) CHECK(structuralEquals(p, r));
    }
}
