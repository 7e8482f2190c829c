#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "wdq/surface.hpp"
#include "wdq/wellformed.hpp"

using namespace wdq;

TEST_CASE("nested OPTIONAL query is well designed") {
    CHECK(checkWellDesigned(fixtures::sectionOneQ()).empty());
    CHECK(checkWellDesigned(fixtures::deepNestedP()).empty());
    CHECK(checkWellDesigned(fixtures::workedExampleP()).empty());
}

TEST_CASE("variable reused outside its optional scope") {
    // ?z appears in the inner optional part and again outside it, but not in
    // the inner left arm.
    auto p = parsePattern("{{?x p ?y OPTIONAL {?y q ?z}} OPTIONAL {?x r ?z}}");
    auto v = checkWellDesigned(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::BadOptVariable);
    REQUIRE(v[0].optId.has_value());
    CHECK(v[0].optId->ordinal == 2);
    CHECK(v[0].variable == "z");
}

TEST_CASE("well designed once the shared variable is in the left arm") {
    auto p = parsePattern("{{?x p ?z OPTIONAL {?y q ?z}} OPTIONAL {?x r ?z}}");
    CHECK(checkWellDesigned(p).empty());
}

TEST_CASE("unsafe filters") {
    auto p = parsePattern("{?x p ?y FILTER(BOUND(?z))}");
    auto v = checkSafe(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::UnsafeFilter);
    CHECK(v[0].variable == "z");

    CHECK(checkSafe(parsePattern("{?x p ?y FILTER(BOUND(?y) && ?x = a)}")).empty());

    // checkWellDesigned subsumes checkSafe
    auto w = checkWellDesigned(p);
    REQUIRE(w.size() == 1);
    CHECK(w[0].kind == Violation::Kind::UnsafeFilter);
}

TEST_CASE("union and nested select are flagged") {
    auto u = parsePattern("{{?x p ?y} UNION {?x q ?y}}");
    auto v = checkWellDesigned(u);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::UnionPresent);

    auto top = parsePattern("SELECT ?x WHERE {?x p ?y}");
    CHECK(checkWellDesigned(top).empty());

    auto nested = Pattern::andOf(Pattern::select({"x"}, parsePattern("{?x p ?y}")),
                                 parsePattern("{?x q ?z}"));
    auto nv = checkWellDesigned(nested);
    REQUIRE(nv.size() == 1);
    CHECK(nv[0].kind == Violation::Kind::NestedSelect);
}

TEST_CASE("multiple violations in preorder") {
    auto p = parsePattern(
        "{{?x p ?y OPTIONAL {?y q ?z}} OPTIONAL {?x r ?z} FILTER(BOUND(?w))}");
    auto v = checkWellDesigned(p);
    REQUIRE(v.size() == 2);
    CHECK(v[0].kind == Violation::Kind::UnsafeFilter);
    CHECK(v[0].variable == "w");
    CHECK(v[1].kind == Violation::Kind::BadOptVariable);
}

TEST_CASE("checker is deterministic and read-only") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        auto p = gen::randomPattern(rng, 6, /*allowUnion=*/true);
        auto before = printPattern(p);
        auto v1 = checkWellDesigned(p);
        auto v2 = checkWellDesigned(p);
        REQUIRE(v1.size() == v2.size());
        for (size_t j = 0; j < v1.size(); ++j) {
            CHECK(v1[j].kind == v2[j].kind);
            CHECK(v1[j].message == v2[j].message);
        }
        CHECK(printPattern(p) == before);
        // safety violations are a subset of well-designedness violations
        CHECK(checkSafe(p).size() <= v1.size());
    }
}

TEST_CASE("violation kinds have readable names") {
    CHECK(toString(Violation::Kind::UnsafeFilter) == "UnsafeFilter");
    CHECK(toString(Violation::Kind::BadOptVariable) == "BadOptVariable");
    CHECK(toString(Violation::Kind::UnionPresent) == "UnionPresent");
    CHECK(toString(Violation::Kind::NestedSelect) == "NestedSelect");
}
